"""
Проверка деревьев вывода по правилам типизации
"""
from dataclasses import dataclass
from typing import Callable, Dict, Optional, Tuple

from src.lambda_core import Abs, App, Var, alpha_equal, free_vars, is_linear, substitute
from src.type_core import OMEGA, And, Arrow, Or, sem_equiv
from .nodes import (
    RULES_WITH_VAR,
    RuleTag,
    TypingDerivation,
    env_dict,
    env_names,
    env_union,
    env_with,
    env_without,
)


@dataclass(frozen=True)
class CheckResult:
    """Результат проверки: ok и диагностика первого неверного узла"""
    ok: bool
    diagnostic: str = ""
    path: Tuple[int, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


def _arity(d: TypingDerivation, n: int) -> Optional[str]:
    if len(d.premises) != n:
        return f"ожидалось посылок: {n}, получено {len(d.premises)}"
    return None


def _same_subject(d: TypingDerivation, *premises: TypingDerivation) -> Optional[str]:
    for p in premises:
        if p.env != d.env:
            return "окружение посылки отличается от заключения"
        if not alpha_equal(p.term, d.term):
            return "терм посылки отличается от заключения"
    return None


def _check_ax(d):
    if d.premises:
        return "у аксиомы нет посылок"
    if not isinstance(d.term, Var):
        return "субъект аксиомы не переменная"
    if d.env != ((d.term.name, d.type),):
        return "окружение аксиомы должно быть x : σ"
    return None


def _check_equiv(d):
    (p,) = d.premises
    return _same_subject(d, p) or (
        None if sem_equiv(p.type, d.type) else "типы посылки и заключения не ≃-эквивалентны"
    )


def _check_arrow_i(d):
    (p,) = d.premises
    if not isinstance(d.term, Abs):
        return "субъект →I не абстракция"
    if not isinstance(d.type, Arrow):
        return "тип →I не стрелка"
    x = d.term.binder
    if x in env_names(d.env):
        return f"переменная {x} уже связана в окружении"
    if p.env != env_with(d.env, x, d.type.left):
        return "окружение посылки →I не равно Γ, x : σ"
    if not alpha_equal(p.term, d.term.body):
        return "терм посылки →I не тело абстракции"
    if p.type != d.type.right:
        return "тип посылки →I не совпадает с правой частью стрелки"
    return None


def _check_arrow_e(d):
    fn, arg = d.premises
    if not isinstance(d.term, App):
        return "субъект →E не применение"
    if not alpha_equal(fn.term, d.term.fn) or not alpha_equal(arg.term, d.term.arg):
        return "термы посылок →E не совпадают с M и N"
    if not isinstance(fn.type, Arrow):
        return "тип функции в →E не стрелка"
    if fn.type.left != arg.type or fn.type.right != d.type:
        return "типы посылок →E не согласованы"
    if env_union(fn.env, arg.env) != d.env:
        return "окружение →E не равно Γ1, Γ2 с непересекающимися областями"
    return None


def _check_and_i(d):
    left, right = d.premises
    return _same_subject(d, left, right) or (
        None if d.type == And(left.type, right.type) else "тип ∧I не равен σ ∧ τ посылок"
    )


def _check_and_e(side: str):
    def check(d):
        (p,) = d.premises
        err = _same_subject(d, p)
        if err:
            return err
        if not isinstance(p.type, And) or getattr(p.type, side) != d.type:
            return "тип посылки ∧E не пересечение с нужным компонентом"
        return None
    return check


def _check_or_i(side: str):
    def check(d):
        (p,) = d.premises
        err = _same_subject(d, p)
        if err:
            return err
        if not isinstance(d.type, Or) or getattr(d.type, side) != p.type:
            return "тип ∨I не объединение с типом посылки"
        return None
    return check


def _split_on_var(p: TypingDerivation, x: str):
    bindings = env_dict(p.env)
    if x not in bindings:
        return None, None
    return env_without(p.env, x), bindings[x]


def _check_substitution(d, body_premise, arg_premise, gamma1) -> Optional[str]:
    expected = substitute(body_premise.term, d.var, arg_premise.term)
    if not alpha_equal(expected, d.term):
        return "субъект заключения не равен M[N/x]"
    if env_union(gamma1, arg_premise.env) != d.env:
        return "окружение заключения не равно Γ1, Γ2 с непересекающимися областями"
    return None


def _check_or_e(d):
    p1, p2, p3 = d.premises
    gamma1, t1 = _split_on_var(p1, d.var)
    gamma1b, t2 = _split_on_var(p2, d.var)
    if gamma1 is None or gamma1b is None or gamma1 != gamma1b:
        return "первые две посылки ∨E должны иметь Γ1, x : …"
    if not (isinstance(t1, And) and isinstance(t2, And) and t1.right == t2.right):
        return "x должна иметь типы σ ∧ ζ и τ ∧ ζ"
    if p3.type != And(Or(t1.left, t2.left), t1.right):
        return "тип третьей посылки ∨E не (σ ∨ τ) ∧ ζ"
    if not alpha_equal(p1.term, p2.term) or p1.type != p2.type or p1.type != d.type:
        return "первые две посылки ∨E должны совпадать по терму и типу с заключением"
    return _check_substitution(d, p1, p3, gamma1)


def _check_adm_l(d):
    conv, body = d.premises
    x = d.var
    if conv.term != Var(x) or len(conv.env) != 1 or conv.env[0][0] != x:
        return "первая посылка (L) должна быть x : σ ⊢ x : τ"
    sigma = conv.env[0][1]
    if env_dict(body.env).get(x) != conv.type:
        return "во второй посылке (L) x должна иметь тип τ"
    if d.env != env_with(body.env, x, sigma):
        return "окружение (L) не равно Γ, x : σ"
    if not alpha_equal(body.term, d.term) or body.type != d.type:
        return "терм и тип (L) должны совпадать со второй посылкой"
    return None


def _check_adm_omega(d):
    if d.premises:
        return "у (ω) нет посылок"
    if d.type != OMEGA:
        return "тип (ω) не ω"
    return None


def _check_adm_c(d):
    body, arg = d.premises
    gamma1, t = _split_on_var(body, d.var)
    if gamma1 is None or t != arg.type:
        return "тип x в первой посылке (C) не равен типу N"
    if body.type != d.type:
        return "тип (C) не совпадает с первой посылкой"
    return _check_substitution(d, body, arg, gamma1)


def _check_adm_or_i(d):
    p1, p2 = d.premises
    gamma, t1 = _split_on_var(p1, d.var)
    gamma_b, t2 = _split_on_var(p2, d.var)
    if gamma is None or gamma_b is None or gamma != gamma_b:
        return "посылки (∨I′) должны иметь Γ, x : …"
    if d.env != env_with(gamma, d.var, Or(t1, t2)):
        return "окружение (∨I′) не равно Γ, x : σ ∨ τ"
    if not (alpha_equal(p1.term, d.term) and alpha_equal(p2.term, d.term)):
        return "термы посылок (∨I′) отличаются от заключения"
    if p1.type != d.type or p2.type != d.type:
        return "типы посылок (∨I′) отличаются от заключения"
    return None


def _check_adm_or_e(d):
    p1, p2, p3 = d.premises
    gamma1, t1 = _split_on_var(p1, d.var)
    gamma1b, t2 = _split_on_var(p2, d.var)
    if gamma1 is None or gamma1b is None or gamma1 != gamma1b:
        return "первые две посылки (∨E′) должны иметь Γ1, x : …"
    if p3.type != Or(t1, t2):
        return "тип третьей посылки (∨E′) не σ ∨ τ"
    if not alpha_equal(p1.term, p2.term) or p1.type != p2.type or p1.type != d.type:
        return "первые две посылки (∨E′) должны совпадать по терму и типу с заключением"
    return _check_substitution(d, p1, p3, gamma1)


_SCHEMAS: Dict[RuleTag, Tuple[int, Callable]] = {
    RuleTag.AX: (0, _check_ax),
    RuleTag.EQUIV: (1, _check_equiv),
    RuleTag.ARROW_I: (1, _check_arrow_i),
    RuleTag.ARROW_E: (2, _check_arrow_e),
    RuleTag.AND_I: (2, _check_and_i),
    RuleTag.AND_E_L: (1, _check_and_e("left")),
    RuleTag.AND_E_R: (1, _check_and_e("right")),
    RuleTag.OR_I_L: (1, _check_or_i("left")),
    RuleTag.OR_I_R: (1, _check_or_i("right")),
    RuleTag.OR_E: (3, _check_or_e),
    RuleTag.ADM_L: (2, _check_adm_l),
    RuleTag.ADM_OMEGA: (0, _check_adm_omega),
    RuleTag.ADM_C: (2, _check_adm_c),
    RuleTag.ADM_OR_I: (2, _check_adm_or_i),
    RuleTag.ADM_OR_E: (3, _check_adm_or_e),
}


def _check_node(d: TypingDerivation) -> Optional[str]:
    names = [name for name, _ in d.env]
    if len(set(names)) != len(names):
        return "переменная связана в окружении дважды"
    if not is_linear(d.term):
        return "субъект не линеен"
    if set(names) != set(free_vars(d.term)):
        return "dom(Γ) не равен FV(M)"
    if (d.rule in RULES_WITH_VAR) != (d.var is not None):
        return "выделенная переменная задана не для того правила"
    arity, check = _SCHEMAS[d.rule]
    return _arity(d, arity) or check(d)


def check_derivation(d: TypingDerivation) -> CheckResult:
    """
    Проверяет каждый узел дерева по схеме его правила.

    Args:
        d: Корень вывода

    Returns:
        CheckResult; при ошибке диагностика называет первый неверный узел (в прямом порядке)
        и нарушенный элемент схемы
    """
    for path, node in d.walk():
        error = _check_node(node)
        if error:
            where = "/".join(str(i) for i in path) or "root"
            return CheckResult(False, f"{node.rule.value} @ {where}: {error}", path)
    return CheckResult(True)
