"""
Абстрактный синтаксис типов: атомы, ω, стрелка, пересечение и объединение
"""
from dataclasses import dataclass
from typing import Iterator, Tuple, Union

RESERVED_OMEGA = "omega"


@dataclass(frozen=True)
class Atom:
    """Атомарный тип φ"""
    name: str

    def __post_init__(self):
        if not self.name or self.name == RESERVED_OMEGA:
            raise ValueError(f"Недопустимое имя атома: {self.name!r}")


@dataclass(frozen=True)
class Omega:
    """Универсальный тип ω"""


@dataclass(frozen=True)
class Arrow:
    left: "TypeExpr"
    right: "TypeExpr"


@dataclass(frozen=True)
class And:
    left: "TypeExpr"
    right: "TypeExpr"


@dataclass(frozen=True)
class Or:
    left: "TypeExpr"
    right: "TypeExpr"


@dataclass(frozen=True)
class NAnd:
    """n-арное пересечение канонической формы (n ≥ 2, дети упорядочены)"""
    children: Tuple["TypeExpr", ...]


@dataclass(frozen=True)
class NOr:
    """n-арное объединение канонической формы (n ≥ 2, дети упорядочены)"""
    children: Tuple["TypeExpr", ...]


TypeExpr = Union[Atom, Omega, Arrow, And, Or]
CanonicalType = Union[Atom, Omega, Arrow, NAnd, NOr]

OMEGA = Omega()


def is_inter(t) -> bool:
    return isinstance(t, (And, NAnd))


def is_union(t) -> bool:
    return isinstance(t, (Or, NOr))


def size(t) -> int:
    """
    Размер типа: число узлов дерева.

    Args:
        t: Тип (бинарный или канонический)

    Returns:
        Число конструкторов в t
    """
    if isinstance(t, (Atom, Omega)):
        return 1
    if isinstance(t, (Arrow, And, Or)):
        return 1 + size(t.left) + size(t.right)
    return 1 + sum(size(c) for c in t.children)


def atoms(t) -> Iterator[str]:
    """Имена атомов, встречающихся в типе (с повторами, слева направо)"""
    if isinstance(t, Atom):
        yield t.name
    elif isinstance(t, (Arrow, And, Or)):
        yield from atoms(t.left)
        yield from atoms(t.right)
    elif isinstance(t, (NAnd, NOr)):
        for child in t.children:
            yield from atoms(child)


def _needs_parens_in_connective(child, parent_is_and: bool, on_right: bool) -> bool:
    if isinstance(child, Arrow):
        return True
    same = (is_inter(child) and parent_is_and) or (is_union(child) and not parent_is_and)
    if same:
        return on_right
    return is_inter(child) or is_union(child)


def print_type(t) -> str:
    """
    Печатает тип в конкретном синтаксисе (`&`, `|`, `->`, `omega`).

    Скобки ставятся только там, где без них разбор дал бы другое дерево.

    Args:
        t: Тип (бинарный или канонический)

    Returns:
        Текстовое представление, повторно разбираемое в тот же тип
    """
    if isinstance(t, Atom):
        return t.name
    if isinstance(t, Omega):
        return RESERVED_OMEGA
    if isinstance(t, Arrow):
        left = print_type(t.left)
        if isinstance(t.left, Arrow):
            left = f"({left})"
        return f"{left} -> {print_type(t.right)}"
    if isinstance(t, (And, Or)):
        is_and = isinstance(t, And)
        op = " & " if is_and else " | "
        left = print_type(t.left)
        right = print_type(t.right)
        if _needs_parens_in_connective(t.left, is_and, on_right=False):
            left = f"({left})"
        if _needs_parens_in_connective(t.right, is_and, on_right=True):
            right = f"({right})"
        return f"{left}{op}{right}"
    if isinstance(t, (NAnd, NOr)):
        is_and = isinstance(t, NAnd)
        op = " & " if is_and else " | "
        parts = []
        for child in t.children:
            text = print_type(child)
            if isinstance(child, Arrow) or is_inter(child) or is_union(child):
                text = f"({text})"
            parts.append(text)
        return op.join(parts)
    raise TypeError(f"Неизвестный узел типа: {t!r}")


def print_full(t) -> str:
    """Полностью скобочная печать; задаёт полный порядок на детях канонических форм"""
    if isinstance(t, Atom):
        return t.name
    if isinstance(t, Omega):
        return RESERVED_OMEGA
    if isinstance(t, Arrow):
        return f"({print_full(t.left)} -> {print_full(t.right)})"
    if isinstance(t, And):
        return f"({print_full(t.left)} & {print_full(t.right)})"
    if isinstance(t, Or):
        return f"({print_full(t.left)} | {print_full(t.right)})"
    op = " & " if isinstance(t, NAnd) else " | "
    return "(" + op.join(print_full(c) for c in t.children) + ")"
