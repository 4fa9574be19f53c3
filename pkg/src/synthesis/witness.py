"""
Свидетели изоморфизма и построение пар FHP по выводам подобия
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Tuple

from src.common.errors import MalformedDerivationError
from src.lambda_core import (
    IDENTITY,
    LambdaTerm,
    Var,
    apply,
    beta_normalize,
    fhp_compose,
    is_fhi_term,
    lam,
    recognize_fhp,
)
from src.preorder import leq_witness
from src.similarity import ArrowPerm, MergeAnd, MergeOr, Refl, SimilarityDerivation
from src.type_core import And, Or, TypeExpr, to_expr


class Provenance(str, Enum):
    """Происхождение свидетеля"""
    LEMMA3 = "lemma3"
    LEQ_WITNESS = "leq-witness"
    NORM_CERTIFICATE = "norm-certificate"
    SIMILARITY = "similarity"


@dataclass(frozen=True)
class IsoWitness:
    """
    Пара взаимно обратных FHP с ⊢ fwd : source → target и ⊢ bwd : target → source.
    """
    source: TypeExpr
    target: TypeExpr
    fwd: LambdaTerm
    bwd: LambdaTerm
    strong: bool
    provenance: Provenance
    detail: str = ""
    derivation: Optional[SimilarityDerivation] = field(default=None, compare=False)

    def inverse(self) -> "IsoWitness":
        """Свидетель обратного изоморфизма"""
        return IsoWitness(
            source=self.target,
            target=self.source,
            fwd=self.bwd,
            bwd=self.fwd,
            strong=self.strong,
            provenance=self.provenance,
            detail=self.detail,
            derivation=self.derivation,
        )


def is_strong_pair(fwd: LambdaTerm, bwd: LambdaTerm) -> bool:
    return is_fhi_term(fwd) and is_fhi_term(bwd)


def _ac_witness(s: TypeExpr, t: TypeExpr) -> LambdaTerm:
    term = leq_witness(s, t)
    if term is None:
        raise MalformedDerivationError("Слитые элементы не совпадают по модулю AC")
    return term


def _merge_pair(d, pair: Tuple[LambdaTerm, LambdaTerm]) -> Tuple[LambdaTerm, LambdaTerm]:
    binary = And if isinstance(d, MergeAnd) else Or
    i = d.index
    premise = d.premise
    left_split = binary(to_expr(premise.lhs[i]), to_expr(premise.lhs[i + 1]))
    right_split = binary(to_expr(premise.rhs[i]), to_expr(premise.rhs[i + 1]))
    left_merged, right_merged = to_expr(d.lhs[i]), to_expr(d.rhs[i])
    p, p_inv = pair
    # λx.Id2(P(Id1 x)) и λx.Id1'(P⁻¹(Id2' x))
    fwd = fhp_compose(
        _ac_witness(right_split, right_merged),
        fhp_compose(p, _ac_witness(left_merged, left_split)),
    )
    bwd = fhp_compose(
        _ac_witness(left_split, left_merged),
        fhp_compose(p_inv, _ac_witness(right_merged, right_split)),
    )
    return fwd, bwd


def _arrow_pair(d: ArrowPerm) -> Tuple[LambdaTerm, LambdaTerm]:
    columns = [derivation_to_fhp_pair(c) for c in d.columns]
    tail, tail_inv = derivation_to_fhp_pair(d.tail)
    perm, inverse = d.perm, d.perm.inverse()
    ys = [f"y{i + 1}" for i in range(d.arity)]

    # P = λx y1…yn. P*(x (P1⁻¹ y_π⁻¹(1)) … (Pn⁻¹ y_π⁻¹(n)))
    forward_args = [apply(columns[i][1], Var(ys[inverse(i)])) for i in range(d.arity)]
    fwd = lam(["x"] + ys, apply(tail, apply(Var("x"), *forward_args)))

    # P⁻¹ = λx y1…yn. P*⁻¹(x (P_π(1) y_π(1)) … (P_π(n) y_π(n)))
    backward_args = [apply(columns[perm(k)][0], Var(ys[perm(k)])) for k in range(d.arity)]
    bwd = lam(["x"] + ys, apply(tail_inv, apply(Var("x"), *backward_args)))
    return beta_normalize(fwd), beta_normalize(bwd)


def derivation_to_fhp_pair(d: SimilarityDerivation) -> Tuple[LambdaTerm, LambdaTerm]:
    """
    Строит пару FHP, доказывающую ηj ≈ θj для всех позиций последовательности.

    Args:
        d: Вывод подобия

    Returns:
        (P, P⁻¹) в β-нормальной форме

    Raises:
        MalformedDerivationError: Узел дерева не согласован
    """
    if isinstance(d, Refl):
        return IDENTITY, IDENTITY
    if isinstance(d, (MergeAnd, MergeOr)):
        return _merge_pair(d, derivation_to_fhp_pair(d.premise))
    if isinstance(d, ArrowPerm):
        fwd, bwd = _arrow_pair(d)
        if recognize_fhp(fwd) is None or recognize_fhp(bwd) is None:
            raise MalformedDerivationError("Стрелочное правило дало не FHP")
        return fwd, bwd
    raise MalformedDerivationError(f"Неизвестный узел вывода: {d!r}")
