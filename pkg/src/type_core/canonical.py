"""
AC-каноническая форма: сплющивание, удаление повторов и упорядочивание детей ∧ и ∨
"""
from functools import lru_cache
from typing import Iterable, Tuple

from .syntax import NAnd, NOr, And, Arrow, Atom, Omega, Or, print_full


def _flatten(t, node_type, nary_type) -> Iterable:
    if isinstance(t, node_type):
        yield from _flatten(t.left, node_type, nary_type)
        yield from _flatten(t.right, node_type, nary_type)
    elif isinstance(t, nary_type):
        yield from t.children
    else:
        yield t


def build_nary(nary_type, items: Iterable):
    """
    Собирает каноническое n-арное ∧ или ∨ из уже канонических операндов.

    Args:
        nary_type: NAnd или NOr
        items: Канонические операнды (могут содержать узлы того же связующего)

    Returns:
        Узел nary_type, либо единственный операнд, если после удаления повторов он один
    """
    flat = []
    for item in items:
        if isinstance(item, nary_type):
            flat.extend(item.children)
        else:
            flat.append(item)
    unique = {print_full(child): child for child in flat}
    ordered = tuple(unique[key] for key in sorted(unique))
    if len(ordered) == 1:
        return ordered[0]
    return nary_type(ordered)


@lru_cache(maxsize=65536)
def canonicalize(t):
    """
    Приводит тип к AC-канонической форме.

    Args:
        t: Бинарный (или уже канонический) тип

    Returns:
        Каноническая форма; совпадает для типов, равных по модулю ассоциативности,
        коммутативности и идемпотентности ∧ и ∨
    """
    if isinstance(t, (Atom, Omega)):
        return t
    if isinstance(t, Arrow):
        return Arrow(canonicalize(t.left), canonicalize(t.right))
    if isinstance(t, (And, NAnd)):
        return build_nary(NAnd, (canonicalize(c) for c in _flatten(t, And, NAnd)))
    if isinstance(t, (Or, NOr)):
        return build_nary(NOr, (canonicalize(c) for c in _flatten(t, Or, NOr)))
    raise TypeError(f"Неизвестный узел типа: {t!r}")


def to_expr(c):
    """
    Переводит каноническую форму обратно в бинарное дерево (правое вложение).

    Args:
        c: Канонический тип

    Returns:
        Бинарный тип; canonicalize(to_expr(c)) == c
    """
    if isinstance(c, (Atom, Omega)):
        return c
    if isinstance(c, Arrow):
        return Arrow(to_expr(c.left), to_expr(c.right))
    if isinstance(c, (NAnd, NOr)):
        binary = And if isinstance(c, NAnd) else Or
        children = [to_expr(child) for child in c.children]
        result = children[-1]
        for child in reversed(children[:-1]):
            result = binary(child, result)
        return result
    if isinstance(c, (And, Or)):
        return type(c)(to_expr(c.left), to_expr(c.right))
    raise TypeError(f"Неизвестный узел типа: {c!r}")


def children_of(c) -> Tuple:
    """Дети n-арного узла или кортеж из самого типа"""
    if isinstance(c, (NAnd, NOr)):
        return c.children
    return (c,)


def ac_equal(s, t) -> bool:
    """Равенство типов по модулю ACI для ∧ и ∨"""
    return canonicalize(s) == canonicalize(t)
