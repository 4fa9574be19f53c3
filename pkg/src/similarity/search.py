"""
Поиск вывода подобия нормальных типов перебором с возвратом
"""
import itertools
from functools import lru_cache
from typing import Iterator, Optional, Tuple

from src.config import get_similarity_max_arity
from src.lambda_core import Permutation
from src.normalizer import classify
from src.services.logger_service import logger
from src.type_core import Arrow, Atom, NAnd, NOr, Omega, build_nary, canonicalize, print_type
from .derivation import ArrowPerm, MergeAnd, MergeOr, Refl, SimilarityDerivation
from .views import arrow_view, spine_length

Pairs = Tuple[Tuple[object, ...], Tuple[object, ...]]


def _is_alpha(t) -> bool:
    return isinstance(t, (Atom, Omega, Arrow))


def _permutations(n: int, strong_only: bool) -> Iterator[Permutation]:
    if strong_only:
        yield Permutation.identity(n)
        return
    for images in itertools.permutations(range(n)):
        yield Permutation(images)


def _proper_subsets(items: Tuple, must_contain_first: bool) -> Iterator[Tuple[Tuple, Tuple]]:
    k = len(items)
    for mask in range(1, (1 << k) - 1):
        if must_contain_first and not mask & 1:
            continue
        chosen = tuple(items[i] for i in range(k) if (mask >> i) & 1)
        rest = tuple(items[i] for i in range(k) if not (mask >> i) & 1)
        yield chosen, rest


def _try_arrow(lhs, rhs, strong_only: bool, max_arity: int) -> Optional[SimilarityDerivation]:
    bound = max(spine_length(t) for t in lhs + rhs)
    if max_arity:
        bound = min(bound, max_arity)
    for n in range(1, bound + 1):
        left_views = [arrow_view(t, n) for t in lhs]
        right_views = [arrow_view(t, n) for t in rhs]
        if any(v is None for v in left_views + right_views):
            continue
        tail = _search(
            tuple(v[1] for v in left_views), tuple(v[1] for v in right_views), strong_only, max_arity
        )
        if tail is None:
            continue
        for perm in _permutations(n, strong_only):
            inverse = perm.inverse()
            columns = []
            for i in range(n):
                column = _search(
                    tuple(v[0][i] for v in left_views),
                    tuple(v[0][inverse(i)] for v in right_views),
                    strong_only,
                    max_arity,
                )
                if column is None:
                    break
                columns.append(column)
            else:
                return ArrowPerm(n, perm, tuple(columns), tail, lhs, rhs)
    return None


def _try_splits(lhs, rhs, strong_only: bool, max_arity: int) -> Optional[SimilarityDerivation]:
    for j, (left, right) in enumerate(zip(lhs, rhs)):
        for nary, node in ((NAnd, MergeAnd), (NOr, MergeOr)):
            if not (isinstance(left, nary) and isinstance(right, nary)):
                continue
            for left_a, left_b in _proper_subsets(left.children, True):
                for right_a, right_b in _proper_subsets(right.children, False):
                    new_lhs = lhs[:j] + (build_nary(nary, left_a), build_nary(nary, left_b)) + lhs[j + 1:]
                    new_rhs = rhs[:j] + (build_nary(nary, right_a), build_nary(nary, right_b)) + rhs[j + 1:]
                    premise = _search(new_lhs, new_rhs, strong_only, max_arity)
                    if premise is not None:
                        return node(j, premise, lhs, rhs)
    logger.debug(f"Разбиения исчерпаны: {len(lhs)} пар без вывода подобия")
    return None


@lru_cache(maxsize=131072)
def _search(lhs, rhs, strong_only: bool, max_arity: int) -> Optional[SimilarityDerivation]:
    if lhs == rhs:
        return Refl(lhs, rhs)
    if all(_is_alpha(t) for t in lhs + rhs):
        return _try_arrow(lhs, rhs, strong_only, max_arity)
    return _try_splits(lhs, rhs, strong_only, max_arity)


def similar_sequences(lhs, rhs, strong_only: bool = False) -> Optional[SimilarityDerivation]:
    """
    Ищет вывод ⟨η1…ηm⟩ ~ ⟨θ1…θm⟩.

    Args:
        lhs: Нормальные канонические типы слева
        rhs: Нормальные канонические типы справа
        strong_only: Разрешать только тождественные перестановки

    Returns:
        Первый найденный вывод или None
    """
    lhs, rhs = tuple(lhs), tuple(rhs)
    if len(lhs) != len(rhs):
        return None
    return _search(lhs, rhs, strong_only, get_similarity_max_arity())


def similar(h, k, strong_only: bool = False) -> Optional[SimilarityDerivation]:
    """
    Ищет вывод подобия двух нормальных типов.

    Порядок перебора: Refl, затем стрелочное правило (меньшая арность и
    тождественная перестановка раньше), затем разбиения пересечений и объединений.

    Args:
        h: Нормальный тип
        k: Нормальный тип
        strong_only: Разрешать только тождественные перестановки

    Returns:
        Вывод подобия или None

    Raises:
        NotNormalError: Один из типов не нормален
    """
    h, k = canonicalize(h), canonicalize(k)
    for side in (h, k):
        classify(side)
    derivation = similar_sequences((h,), (k,), strong_only)
    if derivation is None:
        logger.search("Вывод подобия не найден", f"{print_type(h)} ~ {print_type(k)}")
    else:
        logger.search("Найден вывод подобия", f"{print_type(h)} ~ {print_type(k)}")
    return derivation
