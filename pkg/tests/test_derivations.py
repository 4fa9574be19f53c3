from dataclasses import replace

import pytest

from src.common.errors import MalformedDerivationError
from src.derivations import (
    RuleTag,
    TypingDerivation,
    check_derivation,
    cut,
    cut_as_redex,
    derive_coercion,
    dump_derivation,
    emit_fhp_derivation,
    emit_leq_derivation,
    emit_witness_derivations,
    load_derivation,
    make_env,
)
from src.lambda_core import IDENTITY, PermTree, Abs, App, Var, alpha_equal, beta_normalize, parse_term
from src.normalizer import iso_to_nf, normalize
from src.synthesis import STOCK_ISOMORPHISMS, lemma3_witness
from src.type_core import OMEGA, Arrow, Atom, Or, parse_type, to_expr
from test_synthesis import LEMMA3_PARAMS

p, q, r, s = Atom("p"), Atom("q"), Atom("r"), Atom("s")
ETA = parse_term("\\x y. x y")


def eta_derivation() -> TypingDerivation:
    """⊢ λxy.xy : p → s → p"""
    ax = TypingDerivation(RuleTag.AX, (("x", p),), Var("x"), p)
    conv = TypingDerivation(RuleTag.EQUIV, (("x", p),), Var("x"), Arrow(OMEGA, p), (ax,))
    weak = TypingDerivation(RuleTag.ADM_OMEGA, (("y", s),), Var("y"), OMEGA)
    app = TypingDerivation(
        RuleTag.ARROW_E, make_env([("x", p), ("y", s)]), App(Var("x"), Var("y")), p, (conv, weak)
    )
    inner = TypingDerivation(
        RuleTag.ARROW_I, (("x", p),), Abs("y", app.term), Arrow(s, p), (app,)
    )
    return TypingDerivation(RuleTag.ARROW_I, (), Abs("x", inner.term), Arrow(p, Arrow(s, p)), (inner,))


def at(d: TypingDerivation, path, **changes) -> TypingDerivation:
    """Копия дерева с изменёнными полями узла по пути path"""
    if not path:
        return replace(d, **changes)
    premises = list(d.premises)
    premises[path[0]] = at(premises[path[0]], path[1:], **changes)
    return replace(d, premises=tuple(premises))


def swapped(d: TypingDerivation, path) -> TypingDerivation:
    node = d
    for i in path:
        node = node.premises[i]
    return at(d, path, premises=tuple(reversed(node.premises)))


def dropped(d: TypingDerivation, path) -> TypingDerivation:
    node = d
    for i in path:
        node = node.premises[i]
    return at(d, path, premises=node.premises[:1])


def _mutations():
    d = eta_derivation()
    xy = App(Var("x"), Var("y"))
    return {
        "root type": at(d, (), type=Arrow(p, Arrow(s, q))),
        "root env": at(d, (), env=(("z", q),)),
        "root rule": at(d, (), rule=RuleTag.AX),
        "root var": at(d, (), var="x"),
        "root premises": at(d, (), premises=()),
        "abstraction type": at(d, (0,), type=Arrow(q, p)),
        "abstraction body": at(d, (0,), term=Abs("y", App(Var("y"), Var("x")))),
        "application rule": at(d, (0, 0), rule=RuleTag.AND_I),
        "application type": at(d, (0, 0), type=q),
        "application env": at(d, (0, 0), env=(("x", p),)),
        "application env type": at(d, (0, 0), env=make_env([("x", p), ("y", q)])),
        "application term": at(d, (0, 0), term=App(Var("y"), Var("x"))),
        "conversion type": at(d, (0, 0, 0), type=Arrow(OMEGA, s)),
        "conversion rule": at(d, (0, 0, 0), rule=RuleTag.AX),
        "axiom type": at(d, (0, 0, 0, 0), type=q),
        "axiom term": at(d, (0, 0, 0, 0), term=Var("y")),
        "axiom env": at(d, (0, 0, 0, 0), env=(("x", q),)),
        "weakening type": at(d, (0, 0, 1), type=p),
        "weakening rule": at(d, (0, 0, 1), rule=RuleTag.AX),
        "weakening env": at(d, (0, 0, 1), env=(("z", s),)),
        "swapped premises": swapped(d, (0, 0)),
        "dropped premise": dropped(d, (0, 0)),
        "binder collision": at(d, (0,), term=Abs("x", xy)),
        "non-linear root": at(d, (), term=Abs("x", Abs("y", App(xy, Var("y"))))),
    }


MUTATIONS = _mutations()


class TestChecker:
    def test_eta_expansion_derivation_checks(self):
        result = check_derivation(eta_derivation())
        assert result.ok
        assert result.diagnostic == ""

    def test_mutation_suite_is_large_enough(self):
        assert len(MUTATIONS) >= 20

    @pytest.mark.parametrize("name", sorted(MUTATIONS))
    def test_every_mutation_is_rejected(self, name):
        result = check_derivation(MUTATIONS[name])
        assert not result
        assert result.diagnostic

    def test_diagnostic_names_rule_and_position(self):
        result = check_derivation(MUTATIONS["axiom type"])
        assert result.diagnostic.startswith("Ax @ 0/0/0/0:") or result.diagnostic.startswith("Equiv @ 0/0/0:")
        assert result.path[:3] == (0, 0, 0)

    def test_root_diagnostic_is_labelled_root(self):
        result = check_derivation(MUTATIONS["root premises"])
        assert result.diagnostic.startswith("ArrowI @ root:")

    @pytest.mark.parametrize("body_rule, body_type", [
        (RuleTag.AX, p),
        (RuleTag.EQUIV, Arrow(q, p)),
        (RuleTag.OR_I_L, Or(p, q)),
    ])
    def test_identity_never_types_non_isomorphism(self, body_rule, body_type):
        ax = TypingDerivation(RuleTag.AX, (("x", p),), Var("x"), p)
        body = ax if body_rule == RuleTag.AX else TypingDerivation(
            body_rule, (("x", p),), Var("x"), body_type, (ax,)
        )
        root = TypingDerivation(RuleTag.ARROW_I, (), Abs("x", Var("x")), Arrow(p, Arrow(q, p)), (body,))
        assert not check_derivation(root)


class TestEmission:
    def test_eta_expansion_emitted(self):
        d = emit_fhp_derivation(ETA, p, Arrow(s, p))
        assert d is not None
        assert check_derivation(d)
        assert d.type == Arrow(p, Arrow(s, p))
        assert alpha_equal(d.term, ETA)

    def test_identity_does_not_prove_p_to_q_to_p(self):
        assert emit_fhp_derivation(IDENTITY, p, Arrow(q, p)) is None

    def test_non_permutator_rejected(self):
        assert emit_fhp_derivation(parse_term("\\x y. y x"), p, p) is None

    @pytest.mark.parametrize("name", sorted(STOCK_ISOMORPHISMS))
    def test_stock_isomorphisms_emit_both_directions(self, name):
        witness = lemma3_witness(name, LEMMA3_PARAMS[name])
        pair = emit_witness_derivations(witness)
        assert pair is not None
        fwd, bwd = pair
        assert fwd.type == Arrow(witness.source, witness.target)
        assert bwd.type == Arrow(witness.target, witness.source)
        assert check_derivation(fwd) and check_derivation(bwd)
        assert alpha_equal(fwd.term, beta_normalize(witness.fwd))

    def test_union_inside_intersection_uses_case_split(self):
        source = parse_type("(p | q) & r")
        target = parse_type("(p & r) | (q & r)")
        d = emit_fhp_derivation(IDENTITY, source, target)
        assert d is not None
        assert any(node.rule == RuleTag.OR_E for _, node in d.walk())

    def test_union_inside_intersection_of_argument(self):
        source = parse_type("(p -> q) & (q -> q)")
        target = parse_type("(p | q) & omega -> q")
        d = emit_fhp_derivation(ETA, source, target)
        assert d is not None
        assert check_derivation(d)
        assert any(node.rule == RuleTag.OR_E for _, node in d.walk())

    def test_union_inside_intersection_of_result(self):
        source = parse_type("p -> ((p -> q) | (p -> r)) & s")
        target = parse_type("p -> p -> q | r")
        d = emit_fhp_derivation(parse_term("\\x y z. x y z"), source, target)
        assert d is not None
        assert check_derivation(d)
        assert any(node.rule == RuleTag.OR_E for _, node in d.walk())

    @pytest.mark.parametrize("text", [
        "(p | q) & omega -> q",
        "(p | q) & r -> s",
        "r & (p | q) -> p -> s",
    ])
    def test_normalization_witnesses_with_nested_union(self, text):
        t = parse_type(text)
        normal, _ = normalize(t)
        fwd, bwd = iso_to_nf(t)
        for term, source, target in ((fwd, t, to_expr(normal)), (bwd, to_expr(normal), t)):
            d = emit_fhp_derivation(term, source, target)
            assert d is not None, (text, source, target)
            assert check_derivation(d)

    def test_leq_derivation(self):
        d = emit_leq_derivation(parse_type("p & q"), p)
        assert d is not None and check_derivation(d)
        assert emit_leq_derivation(p, q) is None

    def test_coercion_with_permutation(self):
        tree = PermTree.build([2, 1])
        d = derive_coercion(parse_type("p -> q -> r"), parse_type("q -> p -> r"), tree)
        assert d is not None
        assert check_derivation(d)
        assert d.env == (("x", parse_type("p -> q -> r")),)


class TestCut:
    def _cut(self):
        body = derive_coercion(parse_type("p & q"), parse_type("q & p"), PermTree.identity(), var="v")
        arg = TypingDerivation(RuleTag.AX, (("x", parse_type("p & q")),), Var("x"), parse_type("p & q"))
        return cut(body, "v", arg)

    def test_cut_checks(self):
        node = self._cut()
        assert node.rule == RuleTag.ADM_C
        assert node.term == Var("x")
        assert check_derivation(node)

    def test_cut_as_redex(self):
        redex = cut_as_redex(self._cut())
        assert redex.rule == RuleTag.ARROW_E
        assert isinstance(redex.term, App) and isinstance(redex.term.fn, Abs)
        assert check_derivation(redex)
        assert beta_normalize(redex.term) == Var("x")

    def test_cut_as_redex_ignores_other_rules(self):
        assert cut_as_redex(eta_derivation()) is None

    def test_cut_with_overlapping_env(self):
        body = TypingDerivation(
            RuleTag.ARROW_E, make_env([("v", Arrow(p, q)), ("x", p)]), App(Var("v"), Var("x")), q,
            (TypingDerivation(RuleTag.AX, (("v", Arrow(p, q)),), Var("v"), Arrow(p, q)),
             TypingDerivation(RuleTag.AX, (("x", p),), Var("x"), p)),
        )
        arg = TypingDerivation(RuleTag.AX, (("x", Arrow(p, q)),), Var("x"), Arrow(p, q))
        assert cut(body, "v", arg) is None


class TestSerialization:
    def test_dump_layout(self):
        lines = dump_derivation(eta_derivation()).splitlines()
        assert len(lines) == 6
        assert lines[0] == "ArrowI | [] | \\x y. x y | p -> s -> p"
        assert lines[3].startswith("      Equiv | [x : p] | x | omega -> p")

    def test_round_trip_of_emitted_derivation(self):
        d = emit_fhp_derivation(IDENTITY, parse_type("(p | q) & r"), parse_type("(p & r) | (q & r)"))
        loaded = load_derivation(dump_derivation(d))
        assert loaded == d
        assert check_derivation(loaded)

    def test_rule_variable_printed(self):
        text = dump_derivation(TestCut()._cut())
        assert text.splitlines()[0].startswith("Adm_C[v] | [x : p & q] | x | q & p")

    @pytest.mark.parametrize("text", [
        "",
        "Bogus | [] | x | p",
        "Ax | [x : p] | x",
        "Ax | [x : p | x | p",
        "Ax | [x : p] | (x | p",
        "Ax | [x : p] | x | p ->",
        "ArrowI | [] | \\x. x | p -> p\n      Ax | [x : p] | x | p",
    ])
    def test_malformed_text_rejected(self, text):
        with pytest.raises(MalformedDerivationError):
            load_derivation(text)
