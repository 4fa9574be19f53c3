"""
Перечисление всех типов ограниченного размера
"""
from functools import lru_cache
from typing import List, Sequence, Tuple

from .syntax import OMEGA, And, Arrow, Atom, Or, TypeExpr


@lru_cache(maxsize=None)
def _of_size(atom_names: Tuple[str, ...], include_omega: bool, n: int) -> Tuple[TypeExpr, ...]:
    if n == 1:
        leaves = [Atom(name) for name in atom_names]
        if include_omega:
            leaves.append(OMEGA)
        return tuple(leaves)
    result: List[TypeExpr] = []
    for left_size in range(1, n - 1):
        right_size = n - 1 - left_size
        for left in _of_size(atom_names, include_omega, left_size):
            for right in _of_size(atom_names, include_omega, right_size):
                result.append(Arrow(left, right))
                result.append(And(left, right))
                result.append(Or(left, right))
    return tuple(result)


def enumerate_types(
    atom_names: Sequence[str], max_size: int, include_omega: bool = True
) -> List[TypeExpr]:
    """
    Все бинарные типы над заданными атомами размера не больше max_size.

    Множество замкнуто относительно подтермов.

    Args:
        atom_names: Имена атомов
        max_size: Максимальное число узлов
        include_omega: Включать ли ω как лист

    Returns:
        Список типов, упорядоченный по размеру
    """
    names = tuple(atom_names)
    types: List[TypeExpr] = []
    for n in range(1, max_size + 1):
        types.extend(_of_size(names, include_omega, n))
    return types
