"""
Правила нормализации типов: внутренние правила и распределение на верхнем уровне
"""
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, List, Tuple

from src.lambda_core import PermTree, fhi_tree
from src.preorder import leq_canonical, leq_witness_tree, omega_below
from src.type_core import (
    OMEGA,
    Arrow,
    Atom,
    NAnd,
    NOr,
    Omega,
    Step,
    build_nary,
    to_expr,
)

_ID = PermTree.identity()
# λxy.xy
_ETA = fhi_tree((_ID,))


class RuleTag(str, Enum):
    """Правила переписывания типов"""
    PHI = "PhiRule"
    OMEGA = "OmegaRule"
    AND_ARROW = "AndArrowRule"
    ARROW_AND = "ArrowAndRule"
    OR_ARROW = "OrArrowRule"
    ARROW_OR = "ArrowOrRule"
    LEQ_AND = "LeqAndRule"
    LEQ_OR = "LeqOrRule"
    TOP_DIST = "TopDistRule"


@dataclass(frozen=True)
class Redex:
    """
    Применимое правило в позиции канонического типа.

    path адресует узел в бинарной развёртке to_expr; fwd и bwd: локальные
    FHI-свидетели для to_expr(before) → to_expr(after) и обратно.
    """
    rule: RuleTag
    path: Tuple[Step, ...]
    before: object
    after: object
    fwd: PermTree
    bwd: PermTree


def _child_path(node, index: int) -> Tuple[Step, ...]:
    right, left = (
        (Step.AND_RIGHT, Step.AND_LEFT) if isinstance(node, NAnd) else (Step.OR_RIGHT, Step.OR_LEFT)
    )
    if index == len(node.children) - 1:
        return (right,) * index
    return (right,) * index + (left,)


def _witness(s, t) -> PermTree:
    tree = leq_witness_tree(to_expr(s), to_expr(t))
    if tree is None:
        raise AssertionError("Свидетель ≤ не найден для шага стирания")
    return tree


def _without(children, index: int):
    return children[:index] + children[index + 1:]


def _local_redexes(node, top: bool) -> Iterator[Tuple[RuleTag, object, PermTree, PermTree]]:
    if isinstance(node, Arrow) and isinstance(node.left, Omega) and isinstance(node.right, Atom):
        yield RuleTag.PHI, node.right, _ID, _ID

    if not isinstance(node, Omega) and omega_below(node):
        yield RuleTag.OMEGA, OMEGA, _ID, _witness(OMEGA, node)

    if isinstance(node, Arrow):
        if isinstance(node.right, NAnd):
            after = build_nary(NAnd, (Arrow(node.left, c) for c in node.right.children))
            yield RuleTag.AND_ARROW, after, _ETA, _ETA
        if isinstance(node.left, NOr):
            after = build_nary(NAnd, (Arrow(c, node.right) for c in node.left.children))
            yield RuleTag.OR_ARROW, after, _ETA, _ETA
        if isinstance(node.left, NAnd):
            children = node.left.children
            for i, child in enumerate(children):
                if isinstance(child, NOr):
                    rest = _without(children, i)
                    left = build_nary(
                        NOr, (build_nary(NAnd, (u,) + rest) for u in child.children)
                    )
                    yield RuleTag.ARROW_AND, Arrow(left, node.right), _ETA, _ETA
        if isinstance(node.right, NOr):
            children = node.right.children
            for i, child in enumerate(children):
                if isinstance(child, NAnd):
                    rest = _without(children, i)
                    right = build_nary(
                        NAnd, (build_nary(NOr, (a,) + rest) for a in child.children)
                    )
                    yield RuleTag.ARROW_OR, Arrow(node.left, right), _ETA, _ETA

    if isinstance(node, NAnd):
        for i, child in enumerate(node.children):
            rest = build_nary(NAnd, _without(node.children, i))
            if leq_canonical(rest, child):
                yield RuleTag.LEQ_AND, rest, _witness(node, rest), _witness(rest, node)

    if isinstance(node, NOr):
        for i, child in enumerate(node.children):
            rest = build_nary(NOr, _without(node.children, i))
            if leq_canonical(child, rest):
                yield RuleTag.LEQ_OR, rest, _witness(node, rest), _witness(rest, node)
        if top:
            for i, child in enumerate(node.children):
                if isinstance(child, NAnd):
                    rest = _without(node.children, i)
                    after = build_nary(
                        NAnd, (build_nary(NOr, (a,) + rest) for a in child.children)
                    )
                    yield RuleTag.TOP_DIST, after, _ID, _ID


def _walk(node, path: Tuple[Step, ...], top: bool) -> Iterator[Redex]:
    if isinstance(node, Arrow):
        yield from _walk(node.left, path + (Step.ARROW_LEFT,), False)
        yield from _walk(node.right, path + (Step.ARROW_RIGHT,), False)
    elif isinstance(node, (NAnd, NOr)):
        child_top = top and isinstance(node, NAnd)
        for i, child in enumerate(node.children):
            yield from _walk(child, path + _child_path(node, i), child_top)
    for rule, after, fwd, bwd in _local_redexes(node, top):
        yield Redex(rule, path, node, after, fwd, bwd)


def find_redexes_canonical(c) -> List[Redex]:
    """
    Все применимые правила канонического типа в обратном порядке обхода.

    TopDistRule допускается только в позициях, достижимых из корня через ∧.

    Args:
        c: Канонический тип

    Returns:
        Список редексов; первым идёт самый внутренний левый
    """
    return list(_walk(c, (), True))
