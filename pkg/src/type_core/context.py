"""
Контексты типов: путь от корня до дырки
"""
from dataclasses import dataclass
from enum import Enum
from typing import Tuple

from .syntax import And, Arrow, Or, TypeExpr


class Step(str, Enum):
    """Шаг пути в бинарном дереве типа"""
    ARROW_LEFT = "ArrowLeft"
    ARROW_RIGHT = "ArrowRight"
    AND_LEFT = "AndLeft"
    AND_RIGHT = "AndRight"
    OR_LEFT = "OrLeft"
    OR_RIGHT = "OrRight"


_NODE_FOR_STEP = {
    Step.ARROW_LEFT: (Arrow, "left"),
    Step.ARROW_RIGHT: (Arrow, "right"),
    Step.AND_LEFT: (And, "left"),
    Step.AND_RIGHT: (And, "right"),
    Step.OR_LEFT: (Or, "left"),
    Step.OR_RIGHT: (Or, "right"),
}


@dataclass(frozen=True)
class TypeContext:
    """Контекст C[·], заданный путём до дырки внутри типа-носителя"""
    carrier: TypeExpr
    path: Tuple[Step, ...] = ()

    def plug(self, filler: TypeExpr) -> TypeExpr:
        """Подставляет filler в дырку"""
        return replace_at(self.carrier, self.path, filler)

    def hole(self) -> TypeExpr:
        """Подтерм носителя, стоящий на месте дырки"""
        return subterm_at(self.carrier, self.path)

    def describe(self) -> str:
        return "/".join(step.value for step in self.path) or "root"


def subterm_at(t: TypeExpr, path: Tuple[Step, ...]) -> TypeExpr:
    """
    Возвращает подтерм по пути.

    Raises:
        ValueError: Путь не соответствует форме дерева
    """
    for step in path:
        node_type, attr = _NODE_FOR_STEP[step]
        if not isinstance(t, node_type):
            raise ValueError(f"Шаг {step.value} неприменим к {type(t).__name__}")
        t = getattr(t, attr)
    return t


def replace_at(t: TypeExpr, path: Tuple[Step, ...], filler: TypeExpr) -> TypeExpr:
    """Заменяет подтерм по пути на filler"""
    if not path:
        return filler
    step, rest = path[0], path[1:]
    node_type, attr = _NODE_FOR_STEP[step]
    if not isinstance(t, node_type):
        raise ValueError(f"Шаг {step.value} неприменим к {type(t).__name__}")
    if attr == "left":
        return node_type(replace_at(t.left, rest, filler), t.right)
    return node_type(t.left, replace_at(t.right, rest, filler))


def positions(t: TypeExpr, prefix: Tuple[Step, ...] = ()):
    """Все пути бинарного дерева в обратном порядке обхода (дети раньше родителя)"""
    if isinstance(t, Arrow):
        yield from positions(t.left, prefix + (Step.ARROW_LEFT,))
        yield from positions(t.right, prefix + (Step.ARROW_RIGHT,))
    elif isinstance(t, And):
        yield from positions(t.left, prefix + (Step.AND_LEFT,))
        yield from positions(t.right, prefix + (Step.AND_RIGHT,))
    elif isinstance(t, Or):
        yield from positions(t.left, prefix + (Step.OR_LEFT,))
        yield from positions(t.right, prefix + (Step.OR_RIGHT,))
    yield prefix
