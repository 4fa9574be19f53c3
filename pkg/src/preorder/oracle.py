"""
Оракул для ≤: наименьшая неподвижная точка правил предпорядка на конечной вселенной
"""
from typing import Iterable, List, Set, Tuple

from src.services.logger_service import logger
from src.type_core import And, Arrow, Atom, Omega, Or, TypeExpr, print_full


def _subterms(t: TypeExpr) -> Iterable[TypeExpr]:
    yield t
    if isinstance(t, (Arrow, And, Or)):
        yield from _subterms(t.left)
        yield from _subterms(t.right)


def leq_closure_oracle(universe: Iterable[TypeExpr]) -> Set[Tuple[TypeExpr, TypeExpr]]:
    """
    Вычисляет ≤ как замыкание правил на конечной вселенной.

    Используются только применения правил, у которых посылки и заключение
    лежат во вселенной. Отношение хранится построчно в битовых масках.

    Args:
        universe: Конечное множество бинарных типов, замкнутое относительно подтермов

    Returns:
        Множество пар (s, t) с выводимым s ≤ t

    Raises:
        ValueError: Вселенная не замкнута относительно подтермов
    """
    items: List[TypeExpr] = sorted(set(universe), key=print_full)
    index = {t: i for i, t in enumerate(items)}
    for t in items:
        for sub in _subterms(t):
            if sub not in index:
                raise ValueError(f"Вселенная не замкнута по подтермам: {print_full(sub)}")

    n = len(items)
    rows = [1 << i for i in range(n)]
    omega = index.get(Omega())
    ands = []
    ors = []
    arrows = []
    for i, t in enumerate(items):
        if omega is not None:
            rows[i] |= 1 << omega
        if isinstance(t, And):
            a, b = index[t.left], index[t.right]
            rows[i] |= (1 << a) | (1 << b)
            ands.append((i, a, b))
        elif isinstance(t, Or):
            a, b = index[t.left], index[t.right]
            rows[a] |= 1 << i
            rows[b] |= 1 << i
            ors.append((i, a, b))
        elif isinstance(t, Arrow):
            arrows.append((i, index[t.left], index[t.right]))
            if isinstance(t.right, (Atom, Omega)):
                rows[index[t.right]] |= 1 << i

    rounds = 0
    changed = True
    while changed:
        rounds += 1
        before = list(rows)
        for k in range(n):
            bit = 1 << k
            row_k = rows[k]
            for i in range(n):
                if rows[i] & bit:
                    rows[i] |= row_k
        for i in range(n):
            row = rows[i]
            for c, a, b in ands:
                if (row >> a) & 1 and (row >> b) & 1:
                    row |= 1 << c
            rows[i] = row
        for c, a, b in ors:
            rows[c] |= rows[a] & rows[b]
        for i, s1, s2 in arrows:
            for j, t1, t2 in arrows:
                if (rows[t1] >> s1) & 1 and (rows[s2] >> t2) & 1:
                    rows[i] |= 1 << j
        changed = rows != before

    logger.debug("Оракул ≤ достиг неподвижной точки", f"types={n}, rounds={rounds}")
    return {
        (items[i], items[j])
        for i in range(n)
        for j in range(n)
        if (rows[i] >> j) & 1
    }
