"""
Конечные наследственные перестановщики (FHP): распознавание, обращение, композиция
"""
import itertools
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence, Tuple

from src.common.errors import FhpPreconditionError, InverseVerificationError, StepBudgetExceeded
from src.services.logger_service import logger
from .reduction import beta_normalize, betaeta_equal
from .terms import (
    IDENTITY,
    Abs,
    App,
    LambdaTerm,
    Var,
    apply,
    free_vars,
    fresh_name,
    head_and_args,
    is_linear,
    lam,
    strip_lambdas,
)


@dataclass(frozen=True)
class Permutation:
    """Биекция на {0..n-1}; печатается в 1-базной нотации"""
    images: Tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"Не перестановка: {self.images}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    @classmethod
    def from_one_based(cls, images: Sequence[int]) -> "Permutation":
        return cls(tuple(i - 1 for i in images))

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def is_identity(self) -> bool:
        return all(i == image for i, image in enumerate(self.images))

    def inverse(self) -> "Permutation":
        result = [0] * len(self.images)
        for i, image in enumerate(self.images):
            result[image] = i
        return Permutation(tuple(result))

    def compose(self, other: "Permutation") -> "Permutation":
        """(self ∘ other)(i) = self(other(i))"""
        if other.size != self.size:
            raise ValueError("Композиция перестановок разной длины")
        return Permutation(tuple(self.images[other.images[i]] for i in range(self.size)))

    def one_based(self) -> Tuple[int, ...]:
        return tuple(i + 1 for i in self.images)

    def __str__(self) -> str:
        return "[" + " ".join(str(i) for i in self.one_based()) + "]"


@dataclass(frozen=True)
class PermTree:
    """
    Структурное представление FHP λx y1…yn. x (P1 y_π(1)) … (Pn y_π(n)).

    Дети хранятся по позициям аргументов головы x.
    """
    perm: Permutation
    children: Tuple["PermTree", ...] = ()

    def __post_init__(self):
        if self.perm.size != len(self.children):
            raise ValueError("Арность перестановки не совпадает с числом детей")

    @classmethod
    def identity(cls) -> "PermTree":
        return cls(Permutation(()), ())

    @classmethod
    def build(cls, images: Sequence[int], children: Optional[Sequence["PermTree"]] = None) -> "PermTree":
        """Строит дерево по 1-базным образам; по умолчанию дети тождественны"""
        perm = Permutation.from_one_based(images)
        if children is None:
            children = [cls.identity()] * perm.size
        return cls(perm, tuple(children))

    @property
    def arity(self) -> int:
        return self.perm.size

    def is_fhi(self) -> bool:
        """Все перестановки на всех уровнях тождественны"""
        return self.perm.is_identity() and all(child.is_fhi() for child in self.children)

    def depth(self) -> int:
        return 1 + max((child.depth() for child in self.children), default=0)

    def __str__(self) -> str:
        if not self.children:
            return "id"
        return f"{self.perm}(" + ", ".join(str(child) for child in self.children) + ")"


def _applied_body(tree: PermTree, head: LambdaTerm, counter: Iterator[int]) -> LambdaTerm:
    binders = [f"y{next(counter)}" for _ in range(tree.arity)]
    args = [
        _applied_body(child, Var(binders[tree.perm(i)]), counter)
        for i, child in enumerate(tree.children)
    ]
    return lam(binders, apply(head, *args))


def to_term(tree: PermTree) -> LambdaTerm:
    """
    Переводит дерево в замкнутый линейный β-нормальный терм.

    Args:
        tree: Дерево перестановщика

    Returns:
        Терм вида λx y1…yn. x (…) … (…)
    """
    return Abs("x", _applied_body(tree, Var("x"), itertools.count(1)))


def _recognize_normal(t: LambdaTerm) -> Optional[PermTree]:
    binders, body = strip_lambdas(t)
    if not binders or len(set(binders)) != len(binders):
        return None
    head_name, arg_binders = binders[0], binders[1:]
    head, args = head_and_args(body)
    if head != Var(head_name) or len(args) != len(arg_binders):
        return None
    images = []
    children = []
    for arg in args:
        arg_fv = free_vars(arg)
        if len(arg_fv) != 1:
            return None
        (name,) = arg_fv
        if name not in arg_binders:
            return None
        child = _recognize_normal(Abs(name, arg))
        if child is None:
            return None
        images.append(arg_binders.index(name))
        children.append(child)
    if sorted(images) != list(range(len(images))):
        return None
    return PermTree(Permutation(tuple(images)), tuple(children))


def recognize_fhp(t: LambdaTerm) -> Optional[PermTree]:
    """
    Распознаёт FHP по модулю β-конверсии (η-расширения перестановщиков не принимаются).

    Args:
        t: Линейный терм

    Returns:
        Дерево, для которого to_term даёт β-нормальную форму t (с точностью до α), либо None
    """
    if not is_linear(t):
        return None
    try:
        normal = beta_normalize(t)
    except StepBudgetExceeded:
        return None
    if free_vars(normal):
        return None
    return _recognize_normal(normal)


def is_fhi_term(t: LambdaTerm) -> bool:
    """Терм является конечной наследственной тождественностью (FHI)"""
    tree = recognize_fhp(t)
    return tree is not None and tree.is_fhi()


def _invert_tree(tree: PermTree) -> PermTree:
    inverse = tree.perm.inverse()
    children = tuple(
        _invert_tree(tree.children[inverse(k)]) for k in range(tree.arity)
    )
    return PermTree(inverse, children)


def fhp_invert(tree: PermTree) -> PermTree:
    """
    Строит обратный перестановщик и проверяет его βη-редукцией.

    Args:
        tree: Дерево перестановщика

    Returns:
        Дерево q, для которого verify_inverse_pair(to_term(tree), to_term(q)) истинно

    Raises:
        InverseVerificationError: Построенный обратный не прошёл проверку
    """
    inverse = _invert_tree(tree)
    if not verify_inverse_pair(to_term(tree), to_term(inverse)):
        logger.error("Обращение перестановщика не прошло проверку", str(tree))
        raise InverseVerificationError(f"Неверный обратный для {tree}")
    return inverse


def _compose_raw(p: LambdaTerm, q: LambdaTerm) -> LambdaTerm:
    x = fresh_name("x", free_vars(p) | free_vars(q))
    return beta_normalize(Abs(x, App(p, App(q, Var(x)))))


def fhp_compose(p: LambdaTerm, q: LambdaTerm) -> LambdaTerm:
    """
    Композиция перестановщиков λx. p (q x) в β-нормальной форме.

    Args:
        p: Внешний перестановщик
        q: Внутренний перестановщик

    Returns:
        β-нормальный FHP

    Raises:
        FhpPreconditionError: Один из аргументов не является FHP
    """
    for name, term in (("p", p), ("q", q)):
        if recognize_fhp(term) is None:
            raise FhpPreconditionError(f"Аргумент {name} не является FHP")
    return _compose_raw(p, q)


def verify_inverse_pair(p: LambdaTerm, q: LambdaTerm) -> bool:
    """
    Проверяет p ∘ q =βη q ∘ p =βη λx.x.

    Args:
        p: Линейный терм
        q: Линейный терм

    Returns:
        True, если термы взаимно обратны
    """
    if not (is_linear(p) and is_linear(q)):
        return False
    try:
        return betaeta_equal(_compose_raw(p, q), IDENTITY) and betaeta_equal(
            _compose_raw(q, p), IDENTITY
        )
    except StepBudgetExceeded:
        return False


def merge_fhi(a: PermTree, b: PermTree) -> PermTree:
    """
    Наименьшее общее η-расширение двух FHI.

    Args:
        a: FHI-дерево
        b: FHI-дерево

    Returns:
        FHI-дерево, η-расширяющее оба аргумента

    Raises:
        FhpPreconditionError: Один из аргументов содержит нетождественную перестановку
    """
    if not (a.is_fhi() and b.is_fhi()):
        raise FhpPreconditionError("merge_fhi определён только для FHI")
    arity = max(a.arity, b.arity)
    identity = PermTree.identity()
    children = tuple(
        merge_fhi(
            a.children[i] if i < a.arity else identity,
            b.children[i] if i < b.arity else identity,
        )
        for i in range(arity)
    )
    return PermTree(Permutation.identity(arity), children)


def fhi_tree(children: Sequence[PermTree]) -> PermTree:
    """FHI с тождественной перестановкой над заданными детьми"""
    return PermTree(Permutation.identity(len(children)), tuple(children))
