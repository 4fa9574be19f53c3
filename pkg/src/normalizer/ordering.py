"""
Рекурсивный путевой порядок с полярными метками и классификатор нормальных форм
"""
from enum import Enum
from typing import List, Optional, Tuple

from src.common.errors import NotNormalError
from src.type_core import Arrow, Atom, NAnd, NOr, Omega
from .rules import find_redexes_canonical

# (ранг, имя) задаёт приоритет символа; дети хранятся кортежем помеченных деревьев
Labelled = Tuple[Tuple[int, str], Tuple["Labelled", ...]]


def label(c, left_of_arrow: bool = False) -> Labelled:
    """
    Помечает канонический тип полярностью позиций.

    Слева от стрелки ∧ старше ∨, на верхнем уровне и справа от стрелки ∨ старше ∧.
    """
    if isinstance(c, Omega):
        return ((-1, "omega"), ())
    if isinstance(c, Atom):
        return ((0, "atom:" + c.name), ())
    if isinstance(c, Arrow):
        return ((3, "arrow"), (label(c.left, True), label(c.right, False)))
    if isinstance(c, NAnd):
        rank, name = (2, "and_L") if left_of_arrow else (1, "and_T")
    elif isinstance(c, NOr):
        rank, name = (1, "or_L") if left_of_arrow else (2, "or_T")
    else:
        raise TypeError(f"Ожидался канонический тип: {c!r}")
    children = tuple(sorted(label(child, left_of_arrow) for child in c.children))
    return ((rank, name), children)


def _geq(s: Labelled, t: Labelled) -> bool:
    return s == t or _greater(s, t)


def _multiset_greater(ms: Tuple[Labelled, ...], ns: Tuple[Labelled, ...]) -> bool:
    rest_m: List[Labelled] = list(ms)
    rest_n: List[Labelled] = []
    for item in ns:
        if item in rest_m:
            rest_m.remove(item)
        else:
            rest_n.append(item)
    if not rest_m and not rest_n:
        return False
    return all(any(_greater(m, n) for m in rest_m) for n in rest_n)


def _greater(s: Labelled, t: Labelled) -> bool:
    (s_head, s_args), (t_head, t_args) = s, t
    if any(_geq(arg, t) for arg in s_args):
        return True
    if s_head > t_head:
        return all(_greater(s, arg) for arg in t_args)
    if s_head == t_head:
        return _multiset_greater(s_args, t_args)
    return False


def rpo_greater(s, t) -> bool:
    """
    Проверяет s ≻ t в рекурсивном путевом порядке с мультимножественным статусом.

    Args:
        s: Канонический тип
        t: Канонический тип

    Returns:
        True, если s строго больше t
    """
    return _greater(label(s), label(t))


class NormalClass(str, Enum):
    """Классы нормальных типов"""
    ATOM_OR_ARROW = "alpha"
    INTER_OF_AA = "xi"
    UNION_OF_AA = "mu"
    NORMAL_TYPE = "eta"


def _shape(c) -> Optional[NormalClass]:
    if isinstance(c, (Atom, Omega)):
        return NormalClass.ATOM_OR_ARROW
    if isinstance(c, Arrow):
        left, right = _shape(c.left), _shape(c.right)
        if left in (NormalClass.ATOM_OR_ARROW, NormalClass.INTER_OF_AA) and right in (
            NormalClass.ATOM_OR_ARROW,
            NormalClass.UNION_OF_AA,
        ):
            return NormalClass.ATOM_OR_ARROW
        return None
    shapes = [_shape(child) for child in c.children]
    if isinstance(c, NOr):
        if all(s == NormalClass.ATOM_OR_ARROW for s in shapes):
            return NormalClass.UNION_OF_AA
        return None
    if all(s == NormalClass.ATOM_OR_ARROW for s in shapes):
        return NormalClass.INTER_OF_AA
    if all(s in (NormalClass.ATOM_OR_ARROW, NormalClass.UNION_OF_AA) for s in shapes):
        return NormalClass.NORMAL_TYPE
    return None


def classify(c) -> NormalClass:
    """
    Относит нормальный тип к наиболее узкому классу: α, ξ, μ или η.

    Args:
        c: Канонический тип

    Returns:
        Класс нормальной формы

    Raises:
        NotNormalError: Тип не нормален
    """
    shape = _shape(c)
    if shape is None or find_redexes_canonical(c):
        raise NotNormalError("Тип не находится в нормальной форме")
    return shape


def is_normal(c) -> bool:
    """Тип в нормальной форме"""
    try:
        classify(c)
    except NotNormalError:
        return False
    return True
