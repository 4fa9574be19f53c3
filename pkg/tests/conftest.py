"""
Общие фикстуры: перечисленные вселенные типов и генераторы случайных данных
"""
import random

import pytest

from src.lambda_core import Permutation, PermTree
from src.type_core import enumerate_types, parse_type

ATOMS = ("p", "q")


@pytest.fixture(scope="session")
def small_universe():
    """Все типы над {p, q, ω} размера не больше 5 (замкнуто по подтермам)"""
    return enumerate_types(ATOMS, 5)


@pytest.fixture(scope="session")
def universe():
    """Все типы над {p, q, ω} размера не больше 7"""
    return enumerate_types(ATOMS, 7)


@pytest.fixture
def rng():
    return random.Random(20240607)


@pytest.fixture
def t():
    """Короткая запись для разбора типа в тестах"""
    return parse_type


def random_perm_tree(rng: random.Random, depth: int = 3, max_arity: int = 4) -> PermTree:
    """Случайное дерево перестановщика глубины не больше depth"""
    if depth == 0:
        return PermTree.identity()
    arity = rng.randint(0, max_arity)
    images = list(range(arity))
    rng.shuffle(images)
    children = tuple(random_perm_tree(rng, depth - 1, max_arity) for _ in range(arity))
    return PermTree(Permutation(tuple(images)), children)
