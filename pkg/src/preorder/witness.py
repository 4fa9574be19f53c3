"""
FHI-свидетели для s ≤ t: терм Id с ⊢ Id : s → t
"""
from typing import Optional

from src.lambda_core import LambdaTerm, PermTree, fhi_tree, merge_fhi, to_term
from src.type_core import And, Arrow, Atom, Omega, Or, TypeExpr
from .decider import leq, omega_below

_ID = PermTree.identity()


def _extend_tail(tail: PermTree) -> PermTree:
    """λxy. Id(x y): первый аргумент тождествен, хвост берётся из Id"""
    return fhi_tree((_ID,) + tail.children)


def omega_witness(t: TypeExpr) -> PermTree:
    """
    Свидетель ω ≤ t (при условии omega_below(t)).

    Args:
        t: Бинарный тип с ω ≤ t

    Returns:
        FHI-дерево
    """
    if isinstance(t, Omega):
        return _ID
    if isinstance(t, And):
        return merge_fhi(omega_witness(t.left), omega_witness(t.right))
    if isinstance(t, Or):
        side = t.left if omega_below(t.left) else t.right
        return omega_witness(side)
    if isinstance(t, Arrow):
        return _extend_tail(omega_witness(t.right))
    raise ValueError(f"ω не лежит ниже {t!r}")


def leq_witness_tree(s: TypeExpr, t: TypeExpr) -> Optional[PermTree]:
    """
    Строит FHI-свидетеля s ≤ t рекурсией по следу разрешающей процедуры.

    Args:
        s: Бинарный тип
        t: Бинарный тип

    Returns:
        FHI-дерево или None, если s ≤ t не выполняется
    """
    if not leq(s, t):
        return None
    return _witness(s, t)


def _witness(s: TypeExpr, t: TypeExpr) -> PermTree:
    if s == t:
        return _ID
    if omega_below(t):
        return omega_witness(t)
    if isinstance(t, And):
        return merge_fhi(_witness(s, t.left), _witness(s, t.right))
    if isinstance(s, Or):
        return merge_fhi(_witness(s.left, t), _witness(s.right, t))
    if isinstance(s, And):
        for part in (s.left, s.right):
            if leq(part, t):
                return _witness(part, t)
    if isinstance(t, Or):
        for part in (t.left, t.right):
            if leq(s, part):
                return _witness(s, part)
    if isinstance(s, (Atom, Omega)) and isinstance(t, Arrow):
        return _extend_tail(_witness(s, t.right))
    if isinstance(s, Arrow) and isinstance(t, Arrow):
        arg = _witness(t.left, s.left)
        result = _witness(s.right, t.right)
        return fhi_tree((arg,) + result.children)
    raise AssertionError(f"Нет правила для {s!r} ≤ {t!r} при истинном leq")


def leq_witness(s: TypeExpr, t: TypeExpr) -> Optional[LambdaTerm]:
    """
    FHI-свидетель s ≤ t в виде λ-терма.

    Args:
        s: Бинарный тип
        t: Бинарный тип

    Returns:
        β-нормальный FHI или None, если s ≤ t не выполняется
    """
    tree = leq_witness_tree(s, t)
    return None if tree is None else to_term(tree)
