"""
Шаги переписывания, сертификаты нормализации и подъём свидетелей через контексты
"""
from dataclasses import dataclass
from typing import Iterable, List, Tuple

from src.lambda_core import LambdaTerm, PermTree, fhi_tree, merge_fhi, to_term
from src.type_core import Step, TypeContext, TypeExpr, print_type
from .rules import RuleTag

_ID = PermTree.identity()


@dataclass(frozen=True)
class RewriteStep:
    """
    Один шаг C[before] ⟹ C[after].

    position.carrier: глобальный тип до шага; fwd и bwd: свидетели шага,
    уже поднятые через контекст.
    """
    rule: RuleTag
    position: TypeContext
    before: TypeExpr
    after: TypeExpr
    fwd: PermTree = _ID
    bwd: PermTree = _ID

    @property
    def source(self) -> TypeExpr:
        return self.position.carrier

    @property
    def target(self) -> TypeExpr:
        return self.position.plug(self.after)

    def describe(self) -> str:
        """Строка трассировки: `rule-tag @ path : before ⟹ after`"""
        return (
            f"{self.rule.value} @ {self.position.describe()} : "
            f"{print_type(self.before)} ⟹ {print_type(self.after)}"
        )


@dataclass(frozen=True)
class NormCertificate:
    """Последовательность шагов и пара взаимно обратных FHI"""
    steps: Tuple[RewriteStep, ...] = ()
    fwd_tree: PermTree = _ID
    bwd_tree: PermTree = _ID

    @property
    def witness_fwd(self) -> LambdaTerm:
        return to_term(self.fwd_tree)

    @property
    def witness_bwd(self) -> LambdaTerm:
        return to_term(self.bwd_tree)

    def dump(self) -> str:
        return "\n".join(step.describe() for step in self.steps)


def lift_through_context(
    path: Iterable[Step], fwd: PermTree, bwd: PermTree
) -> Tuple[PermTree, PermTree]:
    """
    Поднимает пару свидетелей σ ⇄ τ до C[σ] ⇄ C[τ].

    Слева от стрелки свидетели меняются местами (λxy.x(Id y)), справа
    от стрелки получается λxy.Id(xy), под ∧ и ∨ свидетель не меняется.

    Args:
        path: Путь от корня до дырки
        fwd: Свидетель σ → τ
        bwd: Свидетель τ → σ

    Returns:
        Пара (C[σ] → C[τ], C[τ] → C[σ])
    """
    for step in reversed(tuple(path)):
        if step == Step.ARROW_LEFT:
            fwd, bwd = fhi_tree((bwd,)), fhi_tree((fwd,))
        elif step == Step.ARROW_RIGHT:
            fwd = fhi_tree((_ID,) + fwd.children)
            bwd = fhi_tree((_ID,) + bwd.children)
    return fwd, bwd


def compose_fhi(trees: List[PermTree]) -> PermTree:
    """
    Композиция последовательности FHI.

    Композиция η-расширений тождества есть их общее η-расширение,
    поэтому порядок не важен.
    """
    result = _ID
    for tree in trees:
        result = merge_fhi(result, tree)
    return result
