"""
Разрешающая процедура для предпорядка нормализации ≤
"""
from dataclasses import dataclass
from functools import lru_cache

from src.type_core import (
    And,
    Arrow,
    Atom,
    NAnd,
    NOr,
    Omega,
    Or,
    TypeExpr,
    canonicalize,
)


@dataclass(frozen=True)
class LeqQuery:
    """Запрос s ≤ t"""
    left: TypeExpr
    right: TypeExpr

    def decide(self) -> bool:
        return leq(self.left, self.right)


def omega_below(t) -> bool:
    """
    Проверяет ω ≤ t для канонического или бинарного типа.

    ω лежит ниже ω, ниже σ→τ при ω ≤ τ, ниже пересечения всех своих
    верхних границ и ниже объединения хотя бы одной из них.
    """
    if isinstance(t, Omega):
        return True
    if isinstance(t, Atom):
        return False
    if isinstance(t, Arrow):
        return omega_below(t.right)
    if isinstance(t, NAnd):
        return all(omega_below(c) for c in t.children)
    if isinstance(t, NOr):
        return any(omega_below(c) for c in t.children)
    if isinstance(t, And):
        return omega_below(t.left) and omega_below(t.right)
    if isinstance(t, Or):
        return omega_below(t.left) or omega_below(t.right)
    raise TypeError(f"Неизвестный узел типа: {t!r}")


@lru_cache(maxsize=262144)
def leq_canonical(s, t) -> bool:
    """
    s ≤ t для канонических форм.

    Порядок правил: ω ниже t; совпадение; t = ∧ (все); s = ∨ (все);
    ветвление по s = ∧ и t = ∨ (хотя бы одна); структурные случаи.
    """
    if omega_below(t):
        return True
    if s == t:
        return True
    if isinstance(t, NAnd):
        return all(leq_canonical(s, c) for c in t.children)
    if isinstance(s, NOr):
        return all(leq_canonical(c, t) for c in s.children)
    if isinstance(s, NAnd) and any(leq_canonical(c, t) for c in s.children):
        return True
    if isinstance(t, NOr) and any(leq_canonical(s, c) for c in t.children):
        return True
    if isinstance(s, (Atom, Omega)) and isinstance(t, Arrow):
        return leq_canonical(s, t.right)
    if isinstance(s, Arrow) and isinstance(t, Arrow):
        return leq_canonical(t.left, s.left) and leq_canonical(s.right, t.right)
    return False


def leq(s, t) -> bool:
    """
    Разрешает s ≤ t.

    Args:
        s: Тип (бинарный или канонический)
        t: Тип (бинарный или канонический)

    Returns:
        True, если s ≤ t выводимо
    """
    return leq_canonical(canonicalize(s), canonicalize(t))
