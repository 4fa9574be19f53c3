import io

import pytest

from src.common.errors import CorpusReadError, IndexFormatError, IndexVersionError
from src.lambda_core import verify_inverse_pair
from src.normalizer import normal_form
from src.similarity import similar
from src.search_index import build_index, coarse_key, corpus_digest, load_index, query, save_index
from src.type_core import And, Arrow, Or, parse_type, print_type, to_expr

CORPUS = """\
# стандартная библиотека
f : p & q -> r
g : p -> q -> r
h : q -> p -> r
k : omega -> p
m : q -> p
w : omega -> p -> p
broken : p ->
"""


@pytest.fixture
def ix():
    return build_index(CORPUS, workers=1)


def _key(text: str) -> str:
    return coarse_key(normal_form(parse_type(text)))


class TestCoarseKey:
    @pytest.mark.parametrize("text, expected", [
        ("p", "a"),
        ("omega", "w"),
        ("p -> q", "F{a}>a"),
        ("omega -> p -> q", "F{a}>a"),
        ("p & (q -> r)", "I{F{a}>a,a}"),
        ("p | q", "U{a,a}"),
    ])
    def test_examples(self, text, expected):
        assert _key(text) == expected

    def test_argument_order_ignored(self):
        assert _key("p -> (q & r) -> s") == _key("(r & q) -> p -> s")

    def test_isomorphic_variants_share_key(self, small_universe):
        for a, b in zip(small_universe[:60], small_universe[60:120]):
            pairs = [
                (And(a, b), And(b, a)),
                (Or(a, b), Or(b, a)),
                (Arrow(a, Arrow(b, a)), Arrow(b, Arrow(a, a))),
                (And(a, a), a),
            ]
            for left, right in pairs:
                assert coarse_key(normal_form(left)) == coarse_key(normal_form(right)), (
                    print_type(left), print_type(right)
                )

    def test_one_key_per_class_over_universe(self, universe):
        classes = {}
        for t in universe:
            classes.setdefault(normal_form(t), set()).add(coarse_key(normal_form(t)))
        assert all(len(keys) == 1 for keys in classes.values())

        representatives = sorted(classes, key=repr)
        for h in representatives:
            for k in representatives:
                if similar(h, k) is not None:
                    assert classes[h] == classes[k], (print_type(to_expr(h)), print_type(to_expr(k)))


class TestBuild:
    def test_entries_in_corpus_order(self, ix):
        assert [e.name for e in ix.entries] == ["f", "g", "h", "k", "m", "w"]
        assert len(ix) == 6

    def test_bad_line_skipped_with_diagnostic(self, ix):
        assert len(ix.skipped) == 1
        assert ix.skipped[0].startswith("строка 8")

    def test_normal_form_stored(self, ix):
        k = next(e for e in ix.entries if e.name == "k")
        assert print_type(to_expr(k.normal)) == "p"
        assert k.coarse_key == "a"

    def test_digest(self, ix):
        assert ix.digest == corpus_digest(CORPUS)

    def test_stream_and_lines_accepted(self):
        assert build_index(io.StringIO(CORPUS)).entries == build_index(CORPUS.splitlines()).entries

    def test_unreadable_stream(self):
        class Broken(io.StringIO):
            def read(self, *args):
                raise OSError("диск недоступен")

        with pytest.raises(CorpusReadError):
            build_index(Broken())

    def test_workers_do_not_change_result(self, small_universe):
        corpus = "\n".join(f"f{i} : {print_type(t)}" for i, t in enumerate(small_universe[:80]))
        single = build_index(corpus, workers=1)
        pooled = build_index(corpus, workers=4)
        assert single.entries == pooled.entries
        assert single.digest == pooled.digest

    def test_workers_from_environment(self, monkeypatch):
        monkeypatch.setenv("ISO_INDEX_WORKERS", "3")
        assert len(build_index(CORPUS)) == 6


class TestQuery:
    def test_intersection_reordered(self, ix):
        hits = query(ix, parse_type("q & p -> r"))
        assert [h.name for h in hits] == ["f"]
        assert hits[0].exact

    def test_exact_hits_first(self, ix):
        hits = query(ix, parse_type("q -> p -> r"))
        assert [h.name for h in hits] == ["h", "g"]
        assert [h.exact for h in hits] == [True, False]

    def test_witness_is_verified_inverse_pair(self, ix):
        hit = query(ix, parse_type("q -> p -> r"))[1]
        assert hit.declared == parse_type("p -> q -> r")
        assert verify_inverse_pair(hit.witness.fwd, hit.witness.bwd)

    def test_same_key_but_not_isomorphic(self, ix):
        assert query(ix, parse_type("p -> q")) == []

    def test_strong_only(self, ix):
        assert [h.name for h in query(ix, parse_type("p -> p"))] == ["w"]
        assert query(ix, parse_type("p -> p"), strong_only=True) == []

    def test_fifty_entry_corpus(self, small_universe):
        types = [parse_type("p & q -> r")] + small_universe[:49]
        ix = build_index("\n".join(f"f{i} : {print_type(t)}" for i, t in enumerate(types)))
        assert len(ix) == 50

        hits = query(ix, parse_type("q & p -> r"))
        assert [h.name for h in hits] == ["f0"]
        assert verify_inverse_pair(hits[0].witness.fwd, hits[0].witness.bwd)

        for i, t in enumerate(types):
            hits = query(ix, t)
            assert f"f{i}" in [h.name for h in hits]
            assert hits[0].exact


class TestStorage:
    def test_round_trip(self, ix, tmp_path):
        path = tmp_path / "corpus.idx"
        save_index(ix, path)
        loaded = load_index(path)
        assert loaded.entries == ix.entries
        assert loaded.digest == ix.digest
        assert [h.name for h in query(loaded, parse_type("q -> p -> r"))] == ["h", "g"]

    def test_header(self, ix, tmp_path):
        path = tmp_path / "corpus.idx"
        save_index(ix, path)
        lines = path.read_text(encoding="utf-8").splitlines()
        assert lines[0] == "ISOIDX v1"
        assert lines[1] == f"digest {ix.digest}"
        assert lines[2] == "F{I{a,a}}>a\tf\tp & q -> r"

    def test_future_version_rejected(self, ix, tmp_path):
        path = tmp_path / "corpus.idx"
        save_index(ix, path)
        text = path.read_text(encoding="utf-8").replace("ISOIDX v1", "ISOIDX v2", 1)
        path.write_text(text, encoding="utf-8")
        with pytest.raises(IndexVersionError):
            load_index(path)

    @pytest.mark.parametrize("corruption", [
        lambda text: "",
        lambda text: text.replace("ISOIDX", "ISO", 1),
        lambda text: "\n".join(line for line in text.splitlines() if not line.startswith("digest")),
        lambda text: text.replace("\tf\t", " f "),
        lambda text: text.replace("p & q -> r", "p & q ->"),
        lambda text: text.replace("F{I{a,a}}>a", "a", 1),
    ])
    def test_corrupted_file_rejected(self, ix, tmp_path, corruption):
        path = tmp_path / "corpus.idx"
        save_index(ix, path)
        path.write_text(corruption(path.read_text(encoding="utf-8")), encoding="utf-8")
        with pytest.raises(IndexFormatError):
            load_index(path)
