"""
Стандартные сильные изоморфизмы: идемпотентность, коммутативность, ассоциативность,
дистрибутивность и стирание
"""
from typing import Callable, Dict, Sequence, Tuple

from src.common.errors import InverseVerificationError, PreconditionError
from src.lambda_core import IDENTITY, LambdaTerm, parse_term, verify_inverse_pair
from src.preorder import leq, leq_witness
from src.type_core import And, Arrow, Or, TypeExpr
from .witness import IsoWitness, Provenance

_ETA = parse_term("\\x y. x y", warn_free=False)

Instantiation = Callable[..., Tuple[TypeExpr, TypeExpr]]

# имя → (число параметров, построение (источник, цель))
STOCK_ISOMORPHISMS: Dict[str, Tuple[int, Instantiation]] = {
    "idem∧": (1, lambda s: (And(s, s), s)),
    "idem∨": (1, lambda s: (Or(s, s), s)),
    "comm∧": (2, lambda s, t: (And(s, t), And(t, s))),
    "comm∨": (2, lambda s, t: (Or(s, t), Or(t, s))),
    "assoc∧": (3, lambda s, t, r: (And(And(s, t), r), And(s, And(t, r)))),
    "assoc∨": (3, lambda s, t, r: (Or(Or(s, t), r), Or(s, Or(t, r)))),
    "dist∧∨": (3, lambda s, t, r: (And(Or(s, t), r), Or(And(s, r), And(t, r)))),
    "dist∨∧": (3, lambda s, t, r: (Or(And(s, t), r), And(Or(s, r), Or(t, r)))),
    "dist→∧": (3, lambda s, t, r: (Arrow(s, And(t, r)), And(Arrow(s, t), Arrow(s, r)))),
    "dist→∨": (3, lambda s, t, r: (Arrow(Or(s, t), r), And(Arrow(s, r), Arrow(t, r)))),
    "erase∧": (2, lambda s, t: (And(s, t), s)),
    "erase∨": (2, lambda s, t: (Or(s, t), t)),
}

_ASCII_ALIASES = {
    "idem-and": "idem∧",
    "idem-or": "idem∨",
    "comm-and": "comm∧",
    "comm-or": "comm∨",
    "assoc-and": "assoc∧",
    "assoc-or": "assoc∨",
    "dist-and-or": "dist∧∨",
    "dist-or-and": "dist∨∧",
    "dist-arrow-and": "dist→∧",
    "dist-arrow-or": "dist→∨",
    "erase-and": "erase∧",
    "erase-or": "erase∨",
}


def resolve_name(name: str) -> str:
    """Принимает каноническое имя изоморфизма или его ASCII-псевдоним"""
    resolved = _ASCII_ALIASES.get(name, name)
    if resolved not in STOCK_ISOMORPHISMS:
        raise PreconditionError(f"Неизвестный изоморфизм: {name}")
    return resolved


def _terms_for(name: str, source: TypeExpr, target: TypeExpr) -> Tuple[LambdaTerm, LambdaTerm]:
    if name in ("dist→∧", "dist→∨"):
        return _ETA, _ETA
    if name == "erase∧":
        return IDENTITY, leq_witness(target, source)
    if name == "erase∨":
        return leq_witness(source, target), IDENTITY
    return IDENTITY, IDENTITY


def lemma3_witness(name: str, params: Sequence[TypeExpr]) -> IsoWitness:
    """
    Инстанцирует стандартный сильный изоморфизм.

    Args:
        name: Имя изоморфизма (idem∧, comm∨, dist→∧, erase∨, …) или ASCII-псевдоним
        params: Типы-параметры σ, τ, ρ по числу параметров изоморфизма

    Returns:
        Свидетель с FHI в обе стороны

    Raises:
        PreconditionError: Неизвестное имя, неверное число параметров или σ ≰ τ для стирания
    """
    name = resolve_name(name)
    arity, build = STOCK_ISOMORPHISMS[name]
    if len(params) != arity:
        raise PreconditionError(f"{name} ожидает {arity} типов, получено {len(params)}")
    if name.startswith("erase") and not leq(params[0], params[1]):
        raise PreconditionError(f"{name} требует σ ≤ τ")
    source, target = build(*params)
    fwd, bwd = _terms_for(name, source, target)
    if not verify_inverse_pair(fwd, bwd):
        raise InverseVerificationError(f"Свидетель {name} не прошёл проверку")
    return IsoWitness(
        source=source,
        target=target,
        fwd=fwd,
        bwd=bwd,
        strong=True,
        provenance=Provenance.LEMMA3,
        detail=name,
    )
