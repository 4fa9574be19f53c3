"""
Деревья вывода отношения подобия
"""
from dataclasses import dataclass
from typing import List, Tuple, Union

from src.common.errors import MalformedDerivationError
from src.lambda_core import Permutation
from src.type_core import NAnd, NOr, build_nary, print_type
from .views import arrow_view

Sequence_ = Tuple[object, ...]


@dataclass(frozen=True)
class Refl:
    lhs: Sequence_
    rhs: Sequence_


@dataclass(frozen=True)
class MergeAnd:
    """Элементы index и index+1 посылки слиты в пересечение"""
    index: int
    premise: "SimilarityDerivation"
    lhs: Sequence_
    rhs: Sequence_


@dataclass(frozen=True)
class MergeOr:
    """Элементы index и index+1 посылки слиты в объединение"""
    index: int
    premise: "SimilarityDerivation"
    lhs: Sequence_
    rhs: Sequence_


@dataclass(frozen=True)
class ArrowPerm:
    """
    Стрелочное правило: столбцы аргументов и хвост, одна перестановка на всю последовательность.

    Столбец i связывает ξ_i слева с χ_i справа, где справа аргументы
    стоят в порядке χ_π(1) … χ_π(n).
    """
    arity: int
    perm: Permutation
    columns: Tuple["SimilarityDerivation", ...]
    tail: "SimilarityDerivation"
    lhs: Sequence_
    rhs: Sequence_


SimilarityDerivation = Union[Refl, MergeAnd, MergeOr, ArrowPerm]


def uses_only_identity(d: SimilarityDerivation) -> bool:
    """Все перестановки в дереве тождественны"""
    if isinstance(d, Refl):
        return True
    if isinstance(d, (MergeAnd, MergeOr)):
        return uses_only_identity(d.premise)
    return (
        d.perm.is_identity()
        and all(uses_only_identity(c) for c in d.columns)
        and uses_only_identity(d.tail)
    )


def _merge_sequence(seq: Sequence_, index: int, nary_type) -> Sequence_:
    merged = build_nary(nary_type, (seq[index], seq[index + 1]))
    return seq[:index] + (merged,) + seq[index + 2:]


def check_similarity(d: SimilarityDerivation) -> None:
    """
    Проверяет, что заключение каждого узла получается из посылок.

    Raises:
        MalformedDerivationError: Узел не согласован с посылками
    """
    if len(d.lhs) != len(d.rhs):
        raise MalformedDerivationError("Последовательности разной длины")
    if isinstance(d, Refl):
        if d.lhs != d.rhs:
            raise MalformedDerivationError("Refl для различных последовательностей")
        return
    if isinstance(d, (MergeAnd, MergeOr)):
        check_similarity(d.premise)
        nary = NAnd if isinstance(d, MergeAnd) else NOr
        if not 0 <= d.index < len(d.premise.lhs) - 1:
            raise MalformedDerivationError("Индекс слияния вне последовательности")
        if (
            _merge_sequence(d.premise.lhs, d.index, nary) != d.lhs
            or _merge_sequence(d.premise.rhs, d.index, nary) != d.rhs
        ):
            raise MalformedDerivationError("Слияние не воспроизводит заключение")
        return
    if d.perm.size != d.arity or len(d.columns) != d.arity:
        raise MalformedDerivationError("Арность стрелочного правила не согласована")
    inverse = d.perm.inverse()
    for j, (left, right) in enumerate(zip(d.lhs, d.rhs)):
        left_view = arrow_view(left, d.arity)
        right_view = arrow_view(right, d.arity)
        if left_view is None or right_view is None:
            raise MalformedDerivationError("Элемент не раскладывается в стрелку нужной арности")
        for i, column in enumerate(d.columns):
            if column.lhs[j] != left_view[0][i] or column.rhs[j] != right_view[0][inverse(i)]:
                raise MalformedDerivationError(f"Столбец {i + 1} не согласован")
        if d.tail.lhs[j] != left_view[1] or d.tail.rhs[j] != right_view[1]:
            raise MalformedDerivationError("Хвост не согласован")
    for column in d.columns:
        check_similarity(column)
    check_similarity(d.tail)


def _sequence_text(seq: Sequence_) -> str:
    return "<" + ", ".join(print_type(t) for t in seq) + ">"


def format_similarity(d: SimilarityDerivation, depth: int = 0) -> List[str]:
    """
    Текстовая трассировка дерева: один узел на строку, отступ равен глубине.

    Returns:
        Список строк
    """
    pad = "  " * depth
    conclusion = f"{_sequence_text(d.lhs)} ~ {_sequence_text(d.rhs)}"
    if isinstance(d, Refl):
        return [f"{pad}Refl : {conclusion}"]
    if isinstance(d, (MergeAnd, MergeOr)):
        name = "MergeAnd" if isinstance(d, MergeAnd) else "MergeOr"
        lines = [f"{pad}{name} i={d.index + 1} : {conclusion}"]
        return lines + format_similarity(d.premise, depth + 1)
    lines = [f"{pad}ArrowPerm n={d.arity} perm={d.perm} : {conclusion}"]
    for column in d.columns:
        lines.extend(format_similarity(column, depth + 1))
    lines.extend(format_similarity(d.tail, depth + 1))
    return lines
