import io
import re

import pytest

from src.cli.app import build_parser, run
from src.cli.commands.iso import NO_WITNESS
from src.cli.registry import get_registry
from src.derivations import dump_derivation
from src.lambda_core import parse_term, verify_inverse_pair
from test_derivations import MUTATIONS, eta_derivation


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out=out)
    return code, out.getvalue().splitlines()


class TestRegistry:
    def test_every_command_has_arguments(self):
        names = get_registry().get_command_names()
        assert set(names) == {
            "parse", "nf", "leq", "equiv", "similar", "iso", "verify",
            "typecheck", "lemma3", "index-build", "index-query",
        }
        build_parser()

    def test_help_texts_in_russian(self):
        registry = get_registry()
        for name in registry.get_command_names():
            doc = registry.get_command(name).__doc__
            assert re.search("[а-яА-Я]", doc), name
            assert not re.search("[a-z]{4,} [a-z]{4,}", doc), name

    def test_unknown_command(self):
        assert get_registry().get_command("bogus") is None
        assert call("bogus")[0] == 2


class TestTypeCommands:
    def test_parse(self):
        code, lines = call("parse", "p -> q & r")
        assert code == 0
        assert lines[0] == "p -> q & r"

    def test_parse_error_is_user_error(self):
        assert call("parse", "p ->")[0] == 2
        assert call("nf", "(p | q")[0] == 2

    def test_missing_argument(self):
        assert call("leq", "p")[0] == 2

    def test_normal_form(self):
        code, lines = call("nf", "((p1 -> p2) & p2) | p3")
        assert code == 0
        assert lines == ["p2 | p3"]

    def test_normal_form_trace(self):
        code, lines = call("nf", "p & p", "--trace")
        assert code == 0
        assert lines[0] == "p"
        assert lines[-2].startswith("fwd: ")
        assert lines[-1].startswith("bwd: ")

    def test_type_from_file(self, tmp_path):
        path = tmp_path / "type.txt"
        path.write_text("omega -> p\n", encoding="utf-8")
        code, lines = call("nf", f"@{path}")
        assert code == 0
        assert lines == ["p"]

    def test_missing_file_is_user_error(self, tmp_path):
        assert call("nf", f"@{tmp_path / 'absent.txt'}")[0] == 2

    def test_leq(self):
        assert call("leq", "p & q", "p") == (0, ["true"])
        assert call("leq", "p", "q") == (1, ["false"])
        code, lines = call("leq", "p & q", "p", "--witness")
        assert code == 0 and len(lines) == 2

    def test_equiv(self):
        assert call("equiv", "omega -> p", "p")[0] == 0
        assert call("equiv", "p & q", "p")[0] == 1

    def test_similar_strong(self):
        assert call("similar", "omega -> p -> p", "p -> p")[0] == 0
        assert call("similar", "omega -> p -> p", "p -> p", "--strong") == (1, ["not similar"])

    def test_similar_derivation(self):
        code, lines = call("similar", "p -> q -> r", "q -> p -> r", "--derivation")
        assert code == 0
        assert lines[0] == "similar"
        assert any(line.startswith("ArrowPerm n=2") for line in lines)


class TestIso:
    def test_swap_pair_verifies(self):
        code, lines = call("iso", "p -> q -> r", "q -> p -> r")
        assert code == 0
        fwd, bwd = (parse_term(line) for line in lines[:2])
        assert verify_inverse_pair(fwd, bwd)

    def test_strong_refused(self):
        assert call("iso", "omega -> p -> p", "p -> p")[0] == 0
        assert call("iso", "--strong", "omega -> p -> p", "p -> p") == (1, [NO_WITNESS])

    def test_not_isomorphic(self):
        assert call("iso", "p -> q", "q -> p") == (1, [NO_WITNESS])

    def test_emit_derivation(self):
        code, lines = call("iso", "p & q", "q & p", "--emit-derivation")
        assert code == 0
        assert lines[2] == ""
        assert lines[3].startswith("ArrowI | [] |")
        assert any("AndI" in line for line in lines)

    def test_lemma3(self):
        code, lines = call("lemma3", "comm-and", "p", "q")
        assert code == 0
        assert lines[0] == "p & q ≈ q & p"

    def test_lemma3_bad_arity(self):
        assert call("lemma3", "comm∧", "p")[0] == 2

    def test_failed_self_check_is_internal_error(self, monkeypatch):
        monkeypatch.setattr("src.synthesis.lemma3.verify_inverse_pair", lambda fwd, bwd: False)
        assert call("lemma3", "comm∧", "p", "q")[0] == 3


class TestTermCommands:
    def test_verify(self):
        swap = "\\x y z. x z y"
        assert call("verify", swap, swap) == (0, ["inverse"])
        assert call("verify", "\\x. x", "\\x y. x y") == (0, ["inverse"])
        assert call("verify", swap, "\\x. x") == (1, ["not inverse"])

    def test_verify_syntax_error(self):
        assert call("verify", "\\x. (x", "\\x. x")[0] == 2

    def test_typecheck(self, tmp_path):
        good = tmp_path / "good.drv"
        good.write_text(dump_derivation(eta_derivation()), encoding="utf-8")
        assert call("typecheck", str(good)) == (0, ["ok"])

        bad = tmp_path / "bad.drv"
        bad.write_text(dump_derivation(MUTATIONS["application type"]), encoding="utf-8")
        code, lines = call("typecheck", str(bad))
        assert code == 1
        assert "@" in lines[0]

    def test_typecheck_malformed(self, tmp_path):
        path = tmp_path / "broken.drv"
        path.write_text("Nonsense", encoding="utf-8")
        assert call("typecheck", str(path))[0] == 2


class TestIndexCommands:
    @pytest.fixture
    def index_path(self, tmp_path):
        corpus = tmp_path / "corpus.txt"
        corpus.write_text("g : p -> q -> r\nh : q -> p -> r\nbad : ->\n", encoding="utf-8")
        output = tmp_path / "corpus.idx"
        assert call("index-build", str(corpus), "-o", str(output)) == (0, ["2 entries, 1 skipped"])
        return output

    def test_query(self, index_path):
        code, lines = call("index-query", str(index_path), "q -> p -> r")
        assert code == 0
        assert [line.split("\t")[0] for line in lines] == ["h", "g"]
        assert lines[1].split("\t")[1] == "p -> q -> r"

    def test_query_without_hits(self, index_path):
        assert call("index-query", str(index_path), "p") == (1, [])

    def test_missing_corpus(self, tmp_path):
        assert call("index-build", str(tmp_path / "absent.txt"), "-o", str(tmp_path / "x.idx"))[0] == 2

    def test_missing_index(self, tmp_path):
        assert call("index-query", str(tmp_path / "absent.idx"), "p")[0] == 2

    def test_corrupted_index(self, tmp_path):
        path = tmp_path / "corrupted.idx"
        path.write_text("not an index\n", encoding="utf-8")
        assert call("index-query", str(path), "p")[0] == 2
