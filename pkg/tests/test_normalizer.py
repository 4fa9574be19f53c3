import random

import pytest

from src.common.errors import NotNormalError
from src.derivations import check_derivation, emit_fhp_derivation
from src.lambda_core import IDENTITY, alpha_equal, is_fhi_term, parse_term, verify_inverse_pair
from src.normalizer import (
    NormalClass,
    RuleTag,
    classify,
    find_redexes,
    is_normal,
    iso_to_nf,
    nf_equal,
    normal_form,
    normalize,
    rpo_greater,
)
from src.type_core import (
    OMEGA,
    And,
    Arrow,
    Atom,
    Omega,
    Or,
    TypeContext,
    canonicalize,
    parse_type,
    positions,
    print_type,
    to_expr,
)

CRITICAL_PAIRS = [
    "(p & (q -> p)) | r",
    "r -> (p & (q -> p)) | s",
    "((p | (q -> p)) & r) -> s",
    "r -> (p | (q -> p)) & s",
    "(r | (p & (q -> p))) -> s",
    "(omega -> p) & (q -> p)",
    "(p -> omega) | omega",
]


def nf(text: str):
    return normal_form(parse_type(text))


def random_strategy(rng: random.Random):
    return lambda redexes: rng.choice(redexes)


def _sem_variants(t, rng: random.Random):
    """Типы, получаемые из t одним применением равенства ≃ в любую сторону"""
    variants = [And(t, OMEGA), And(OMEGA, t)]
    if isinstance(t, Atom):
        variants.append(Arrow(OMEGA, t))
    if isinstance(t, Omega):
        variants += [Arrow(OMEGA, OMEGA), Or(OMEGA, rng.choice([Atom("p"), Atom("q")]))]
    if isinstance(t, Arrow) and isinstance(t.left, Omega) and isinstance(t.right, (Atom, Omega)):
        variants.append(t.right)
    if isinstance(t, And) and isinstance(t.right, Omega):
        variants.append(t.left)
    if isinstance(t, And) and isinstance(t.left, Omega):
        variants.append(t.right)
    if isinstance(t, Or) and (isinstance(t.left, Omega) or isinstance(t.right, Omega)):
        variants.append(OMEGA)
    return variants


class TestRedexes:
    def test_phi_rule(self):
        steps = find_redexes(parse_type("omega -> p"))
        assert [(s.rule, s.position.path) for s in steps] == [(RuleTag.PHI, ())]

    def test_omega_rule(self):
        steps = find_redexes(parse_type("p -> omega"))
        assert [(s.rule, s.position.path) for s in steps] == [(RuleTag.OMEGA, ())]

    def test_atom_is_normal(self):
        assert find_redexes(Atom("p")) == []

    def test_step_description(self):
        (step,) = find_redexes(parse_type("omega -> p"))
        assert step.describe() == "PhiRule @ root : omega -> p ⟹ p"


class TestNormalize:
    def test_worked_examples(self):
        assert nf("((p1 -> p2) & p2) | p3") == canonicalize(parse_type("p2 | p3"))
        assert nf("((p1 -> p2) | p2) & p3") == canonicalize(parse_type("(p1 -> p2) & p3"))

    def test_distribution(self):
        assert nf("a -> b & c") == canonicalize(parse_type("(a -> b) & (a -> c)"))

    def test_already_normal(self):
        t = parse_type("omega -> p -> p")
        normal, certificate = normalize(t)
        assert normal == canonicalize(t)
        assert certificate.steps == ()

    def test_nf_equal(self):
        assert nf_equal(Atom("p"), parse_type("omega -> p"))
        assert nf_equal(parse_type("a & b"), parse_type("b & a"))
        assert not nf_equal(parse_type("a -> b"), parse_type("b -> a"))

    def test_witness_pairs(self):
        fwd, bwd = iso_to_nf(Atom("p"))
        assert alpha_equal(fwd, IDENTITY) and alpha_equal(bwd, IDENTITY)
        fwd, _ = iso_to_nf(parse_type("((p1 -> p2) & p2) | p3"))
        assert alpha_equal(fwd, IDENTITY)
        fwd, bwd = iso_to_nf(parse_type("a -> b & c"))
        eta = parse_term("\\x y. x y")
        assert alpha_equal(fwd, eta) and alpha_equal(bwd, eta)

    def test_trace_lists_every_step(self):
        _, certificate = normalize(parse_type("((p1 -> p2) & p2) | p3"))
        assert certificate.steps
        assert all(step.rule == RuleTag.LEQ_AND for step in certificate.steps)
        assert len(certificate.dump().splitlines()) == len(certificate.steps)

    @pytest.mark.parametrize("text", CRITICAL_PAIRS)
    def test_critical_pairs_converge(self, text, rng):
        t = parse_type(text)
        expected = normal_form(t)
        for _ in range(10):
            assert normalize(t, random_strategy(rng))[0] == expected


class TestNormalForms:
    def test_classify(self):
        assert classify(canonicalize(parse_type("p -> q"))) == NormalClass.ATOM_OR_ARROW
        assert classify(canonicalize(parse_type("(p -> q) & (q -> p)"))) == NormalClass.INTER_OF_AA
        assert classify(canonicalize(parse_type("p | (q -> q)"))) == NormalClass.UNION_OF_AA
        assert classify(canonicalize(parse_type("(p | q) & (q -> p)"))) == NormalClass.NORMAL_TYPE

    def test_classify_rejects_redexes(self):
        with pytest.raises(NotNormalError):
            classify(canonicalize(parse_type("omega -> p")))
        assert not is_normal(canonicalize(parse_type("p -> (q & p)")))

    def test_universe(self, universe):
        for t in universe:
            normal, certificate = normalize(t)
            assert is_normal(normal)
            assert normal_form(to_expr(normal)) == normal
            for step in certificate.steps:
                assert rpo_greater(canonicalize(step.source), canonicalize(step.target))

    def test_random_strategies_agree(self, universe, rng):
        for t in rng.sample(universe, 500):
            expected = normal_form(t)
            for _ in range(10):
                assert normalize(t, random_strategy(rng))[0] == expected

    def test_iso_to_nf_witnesses(self, small_universe):
        for t in small_universe:
            fwd, bwd = iso_to_nf(t)
            assert verify_inverse_pair(fwd, bwd)
            assert is_fhi_term(fwd) and is_fhi_term(bwd)

    def test_iso_to_nf_derivations_over_universe(self, universe):
        missing = []
        for t in universe:
            normal, _ = normalize(t)
            target = to_expr(normal)
            fwd, bwd = iso_to_nf(t)
            assert verify_inverse_pair(fwd, bwd)
            for term, source, goal in ((fwd, t, target), (bwd, target, t)):
                d = emit_fhp_derivation(term, source, goal)
                if d is None:
                    missing.append(f"{print_type(source)} => {print_type(goal)}")
                else:
                    assert check_derivation(d), print_type(t)
        assert missing == [], f"без вывода {len(missing)} из {2 * len(universe)}"

    def test_semantic_rewrites_preserve_normal_form(self, small_universe, rng):
        for _ in range(1000):
            original = rng.choice(small_universe)
            current = original
            for _ in range(rng.randint(1, 4)):
                path = rng.choice(list(positions(current)))
                context = TypeContext(current, path)
                variants = _sem_variants(context.hole(), rng)
                current = context.plug(rng.choice(variants))
            assert nf_equal(original, current), (original, current)