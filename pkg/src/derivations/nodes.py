"""
Деревья вывода типов и окружения
"""
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterable, Optional, Tuple

from src.lambda_core import LambdaTerm
from src.type_core import TypeExpr

Env = Tuple[Tuple[str, TypeExpr], ...]


class RuleTag(str, Enum):
    """Правила типизации и допустимые правила"""
    AX = "Ax"
    EQUIV = "Equiv"
    ARROW_I = "ArrowI"
    ARROW_E = "ArrowE"
    AND_I = "AndI"
    AND_E_L = "AndE_l"
    AND_E_R = "AndE_r"
    OR_I_L = "OrI_l"
    OR_I_R = "OrI_r"
    OR_E = "OrE"
    ADM_L = "Adm_L"
    ADM_OMEGA = "Adm_Omega"
    ADM_C = "Adm_C"
    ADM_OR_I = "Adm_OrI'"
    ADM_OR_E = "Adm_OrE'"


# правила, у которых в заключении выделена переменная
RULES_WITH_VAR = frozenset(
    {RuleTag.OR_E, RuleTag.ADM_L, RuleTag.ADM_C, RuleTag.ADM_OR_I, RuleTag.ADM_OR_E}
)


def make_env(bindings: Iterable[Tuple[str, TypeExpr]]) -> Env:
    """Окружение как отсортированный по имени кортеж пар"""
    return tuple(sorted(bindings, key=lambda item: item[0]))


def env_dict(env: Env) -> Dict[str, TypeExpr]:
    return dict(env)


def env_names(env: Env) -> frozenset:
    return frozenset(name for name, _ in env)


def env_union(first: Env, second: Env) -> Optional[Env]:
    """Объединение окружений с непересекающимися областями; None при пересечении"""
    if env_names(first) & env_names(second):
        return None
    return make_env(first + second)


def env_without(env: Env, name: str) -> Env:
    return tuple(item for item in env if item[0] != name)


def env_with(env: Env, name: str, t: TypeExpr) -> Env:
    return make_env(env_without(env, name) + ((name, t),))


@dataclass(frozen=True)
class TypingDerivation:
    """Узел вывода Γ ⊢ M : σ"""
    rule: RuleTag
    env: Env
    term: LambdaTerm
    type: TypeExpr
    premises: Tuple["TypingDerivation", ...] = ()
    var: Optional[str] = None

    def size(self) -> int:
        return 1 + sum(p.size() for p in self.premises)

    def walk(self, path: Tuple[int, ...] = ()):
        """Все узлы с путями в прямом порядке"""
        yield path, self
        for i, premise in enumerate(self.premises):
            yield from premise.walk(path + (i,))
