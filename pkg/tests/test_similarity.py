import pytest

from src.common.errors import MalformedDerivationError, NotNormalError
from src.lambda_core import Permutation, verify_inverse_pair
from src.normalizer import normal_form
from src.similarity import (
    ArrowPerm,
    Refl,
    arrow_view,
    check_similarity,
    format_similarity,
    similar,
    similar_sequences,
    spine_length,
    uses_only_identity,
)
from src.synthesis import synthesize_iso
from src.type_core import OMEGA, And, Arrow, Atom, Or, canonicalize, parse_type, print_type, to_expr

SWAP = Permutation.from_one_based([2, 1])
GRAND_LEFT = "p5 -> p6 -> p7 -> (p1 -> p3) | (omega -> p2 -> p4)"
GRAND_RIGHT = "p7 -> p5 -> p6 -> (omega -> p1 -> p3) | (p2 -> p4)"


def c(text: str):
    return canonicalize(parse_type(text))


class TestViews:
    def test_padding(self):
        assert arrow_view(c("p1 -> p3"), 2) == ((Atom("p1"), OMEGA), Atom("p3"))
        assert arrow_view(Atom("p"), 1) == ((OMEGA,), Atom("p"))

    def test_zero_arity(self):
        assert arrow_view(c("p1 -> p2"), 0) == ((), c("p1 -> p2"))

    def test_no_padding_under_union_tail(self):
        assert arrow_view(c("p | q"), 1) is None

    def test_spine_length(self):
        assert spine_length(c("p -> q -> r")) == 2
        assert spine_length(Atom("p")) == 0


class TestSearch:
    def test_reflexivity(self):
        d = similar(c("p -> q"), c("p -> q"))
        assert isinstance(d, Refl)

    def test_sequence_with_swap(self):
        d = similar_sequences(
            (c("p1 -> p3"), c("omega -> p2 -> p4")),
            (c("omega -> p1 -> p3"), c("p2 -> p4")),
        )
        assert isinstance(d, ArrowPerm)
        assert d.arity == 2 and d.perm == SWAP
        check_similarity(d)

    def test_grand_example(self):
        d = similar(normal_form(parse_type(GRAND_LEFT)), normal_form(parse_type(GRAND_RIGHT)))
        assert d is not None
        check_similarity(d)
        assert not uses_only_identity(d)

    def test_distinct_atoms_are_not_similar(self):
        assert similar(c("p1 -> p2"), c("p2 -> p1")) is None

    def test_strong_only(self):
        h, k = c("omega -> p -> p"), c("p -> p")
        assert similar(h, k) is not None
        assert similar(h, k, strong_only=True) is None

    def test_inputs_must_be_normal(self):
        with pytest.raises(NotNormalError):
            similar(c("omega -> p"), Atom("p"))

    def test_sequences_of_different_length(self):
        assert similar_sequences((Atom("p"),), (Atom("p"), Atom("q"))) is None

    def test_union_split(self):
        d = similar(c("(q -> p -> r) | s"), c("s | (p -> q -> r)"))
        assert d is not None
        check_similarity(d)


class TestDerivations:
    def test_format(self):
        d = similar(c("p -> q -> r"), c("q -> p -> r"))
        lines = format_similarity(d)
        assert lines[0] == "ArrowPerm n=2 perm=[2 1] : <p -> q -> r> ~ <q -> p -> r>"
        assert all(line.startswith("  ") for line in lines[1:])

    def test_malformed_refl(self):
        with pytest.raises(MalformedDerivationError):
            check_similarity(Refl((Atom("p"),), (Atom("q"),)))

    def test_malformed_arrow(self):
        d = similar(c("p -> q -> r"), c("q -> p -> r"))
        broken = ArrowPerm(d.arity, Permutation.identity(2), d.columns, d.tail, d.lhs, d.rhs)
        with pytest.raises(MalformedDerivationError):
            check_similarity(broken)

    def test_similar_normal_forms_in_universe(self, small_universe):
        normals = sorted({normal_form(t) for t in small_universe}, key=repr)
        for h in normals:
            for k in normals:
                d = similar(h, k)
                if d is not None:
                    check_similarity(d)


def _shuffled(t, rng):
    """Тот же тип с перемешанными операндами ∧ и ∨"""
    if isinstance(t, Arrow):
        return Arrow(_shuffled(t.left, rng), _shuffled(t.right, rng))
    if isinstance(t, (And, Or)):
        left, right = _shuffled(t.left, rng), _shuffled(t.right, rng)
        if rng.random() < 0.5:
            left, right = right, left
        return type(t)(left, right)
    return t


class TestUniverseProperties:
    @pytest.fixture(scope="class")
    def normals(self, small_universe):
        return sorted({normal_form(t) for t in small_universe}, key=repr)

    @pytest.fixture(scope="class")
    def table(self, normals):
        return {(h, k): similar(h, k) is not None for h in normals for k in normals}

    def test_symmetry(self, normals, table):
        for h in normals:
            for k in normals:
                assert table[h, k] == table[k, h], (print_type(to_expr(h)), print_type(to_expr(k)))

    def test_similar_pairs_synthesize_verified_witness(self, normals, table):
        for h in normals:
            for k in normals:
                if not table[h, k]:
                    continue
                witness = synthesize_iso(to_expr(h), to_expr(k))
                assert witness is not None, (print_type(to_expr(h)), print_type(to_expr(k)))
                assert verify_inverse_pair(witness.fwd, witness.bwd)

    def test_permuted_operands_give_same_answer(self, normals, table, rng):
        for h in normals:
            for k in normals:
                left, right = _shuffled(to_expr(h), rng), _shuffled(to_expr(k), rng)
                assert (similar(canonicalize(left), canonicalize(right)) is not None) == table[h, k]
                if table[h, k]:
                    witness = synthesize_iso(left, right)
                    assert witness is not None
                    assert verify_inverse_pair(witness.fwd, witness.bwd)
