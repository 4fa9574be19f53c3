import pytest

from src.common.errors import FhpPreconditionError, TermSyntaxError
from src.lambda_core import (
    IDENTITY,
    App,
    Permutation,
    PermTree,
    Var,
    alpha_equal,
    beta_normalize,
    betaeta_equal,
    eta_normalize,
    fhi_tree,
    fhp_compose,
    fhp_invert,
    free_vars,
    is_fhi_term,
    is_linear,
    merge_fhi,
    parse_term,
    print_term,
    recognize_fhp,
    substitute,
    to_term,
    verify_inverse_pair,
)
from conftest import random_perm_tree
from src.lambda_core import parser as parser_module

SWAP = PermTree.build([2, 1])


class TestTerms:
    def test_parse_backslash_and_lambda(self):
        assert alpha_equal(parse_term("\\x y. x y"), parse_term("λa b. a b"))

    def test_syntax_described_with_literal_backslash(self):
        assert "`\\x y. body`" in parser_module.__doc__

    def test_application_is_left_associative(self):
        assert parse_term("f a b") == App(App(Var("f"), Var("a")), Var("b"))

    def test_print_collapses_binders(self):
        assert print_term(parse_term("\\x. \\y. x (y z)", warn_free=False)) == "\\x y. x (y z)"

    @pytest.mark.parametrize("text", ["\\x x", "(x", "\\. x", "x )", "x # y"])
    def test_malformed(self, text):
        with pytest.raises(TermSyntaxError):
            parse_term(text)

    def test_free_vars_and_linearity(self):
        t = parse_term("\\x. x y", warn_free=False)
        assert free_vars(t) == frozenset({"y"})
        assert is_linear(t)
        assert not is_linear(parse_term("\\x. x x"))
        assert not is_linear(parse_term("\\x y. x"))

    def test_substitution_avoids_capture(self):
        t = parse_term("\\y. x y", warn_free=False)
        result = substitute(t, "x", Var("y"))
        assert alpha_equal(result, parse_term("\\z. y z", warn_free=False))

    def test_alpha_equal(self):
        assert alpha_equal(parse_term("\\x y. x y"), parse_term("\\a b. a b"))
        assert not alpha_equal(parse_term("\\x y. x y"), parse_term("\\x y. y x"))


class TestReduction:
    def test_beta(self):
        t = parse_term("(\\x. x) (\\y. y)")
        assert alpha_equal(beta_normalize(t), IDENTITY)

    def test_eta(self):
        assert alpha_equal(eta_normalize(parse_term("\\x y. x y")), IDENTITY)

    def test_betaeta_equal(self):
        assert betaeta_equal(parse_term("\\x y z. x y z"), IDENTITY)
        assert not betaeta_equal(parse_term("\\x y z. x z y"), IDENTITY)


class TestPermutators:
    def test_swap_term(self):
        assert alpha_equal(to_term(SWAP), parse_term("\\x y1 y2. x y2 y1"))

    def test_permutation_algebra(self):
        p = Permutation.from_one_based([2, 3, 1])
        assert p.compose(p.inverse()).is_identity()
        assert str(p) == "[2 3 1]"
        assert Permutation.identity(3).is_identity()
        with pytest.raises(ValueError):
            Permutation((0, 0))

    def test_recognize_up_to_beta(self):
        t = parse_term("\\x. (\\f y1 y2. f y2 y1) x")
        assert recognize_fhp(t) == SWAP

    def test_recognize_rejects_non_permutators(self):
        assert recognize_fhp(parse_term("\\x y. y x")) is None
        assert recognize_fhp(parse_term("\\x y. x y y")) is None
        assert recognize_fhp(parse_term("\\x. x", warn_free=False)) == PermTree.identity()

    def test_fhi(self):
        assert is_fhi_term(parse_term("\\x y. x y"))
        assert not is_fhi_term(to_term(SWAP))

    def test_swap_is_self_inverse(self):
        assert fhp_invert(SWAP) == SWAP
        assert verify_inverse_pair(to_term(SWAP), to_term(SWAP))

    def test_compose_requires_permutators(self):
        with pytest.raises(FhpPreconditionError):
            fhp_compose(parse_term("\\x y. y x"), IDENTITY)

    def test_compose_swaps_gives_identity(self):
        assert betaeta_equal(fhp_compose(to_term(SWAP), to_term(SWAP)), IDENTITY)

    def test_verify_rejects_non_inverse(self):
        cycle = to_term(PermTree.build([2, 3, 1]))
        assert not verify_inverse_pair(cycle, cycle)
        assert not verify_inverse_pair(parse_term("\\x. x x"), IDENTITY)

    def test_fhi_composition_is_merge(self):
        a = fhi_tree([PermTree.identity(), fhi_tree([PermTree.identity()])])
        b = fhi_tree([fhi_tree([PermTree.identity()])])
        composed = recognize_fhp(fhp_compose(to_term(a), to_term(b)))
        assert composed == merge_fhi(a, b)

    def test_merge_rejects_permutations(self):
        with pytest.raises(FhpPreconditionError):
            merge_fhi(SWAP, PermTree.identity())


class TestPermutatorProperties:
    def test_random_trees(self, rng):
        for _ in range(500):
            tree = random_perm_tree(rng, depth=3, max_arity=4)
            term = to_term(tree)
            assert recognize_fhp(term) == tree
            inverse = fhp_invert(tree)
            assert verify_inverse_pair(term, to_term(inverse))
            assert fhp_invert(inverse) == tree
