"""
Стрелочные представления нормальных типов
"""
from typing import Optional, Tuple

from src.type_core import OMEGA, Arrow, Atom, Omega


def spine_length(a) -> int:
    """Длина явного стрелочного хребта"""
    length = 0
    while isinstance(a, Arrow):
        length += 1
        a = a.right
    return length


def arrow_view(a, n: int) -> Optional[Tuple[Tuple[object, ...], object]]:
    """
    Читает a как nf(ξ1 → … → ξn → μ).

    Если явный хребет короче n, а хвост является атомом или ω, недостающие аргументы
    дополняются ω: такое дополнение не видно в нормальной форме.

    Args:
        a: Нормальный тип
        n: Арность

    Returns:
        ((ξ1, …, ξn), μ) или None, если такого прочтения нет
    """
    args = []
    tail = a
    while len(args) < n and isinstance(tail, Arrow):
        args.append(tail.left)
        tail = tail.right
    if len(args) < n:
        if not isinstance(tail, (Atom, Omega)):
            return None
        args.extend([OMEGA] * (n - len(args)))
    return tuple(args), tail
