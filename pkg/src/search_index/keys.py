"""
Грубый ключ нормального типа для корзин индекса
"""
from functools import lru_cache

from src.type_core import Arrow, Atom, NAnd, NOr, Omega

ATOM_KEY = "a"
OMEGA_KEY = "w"


@lru_cache(maxsize=65536)
def coarse_key(normal) -> str:
    """
    Скелет нормального типа: атомы заменены одним символом, стрелочный хребет
    свёрнут в мультимножество аргументов без ω, дети ∧/∨ отсортированы.

    Подобные типы получают один ключ: подобие переставляет столбцы хребта,
    дополняет его ω и разбивает ∧/∨ на части, но не меняет этих мультимножеств.

    Args:
        normal: Нормальный канонический тип

    Returns:
        Строковый ключ
    """
    if isinstance(normal, Atom):
        return ATOM_KEY
    if isinstance(normal, Omega):
        return OMEGA_KEY
    if isinstance(normal, Arrow):
        args = []
        tail = normal
        while isinstance(tail, Arrow):
            if not isinstance(tail.left, Omega):
                args.append(coarse_key(tail.left))
            tail = tail.right
        base = coarse_key(tail)
        if not args:
            return base
        return "F{" + ",".join(sorted(args)) + "}>" + base
    if isinstance(normal, (NAnd, NOr)):
        tag = "I" if isinstance(normal, NAnd) else "U"
        return tag + "{" + ",".join(sorted(coarse_key(c) for c in normal.children)) + "}"
    raise TypeError(f"Ключ определён только для канонических типов: {normal!r}")
