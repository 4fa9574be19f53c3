"""
β-нормализация, η-редукция и βη-равенство
"""
from src.common.errors import StepBudgetExceeded
from .terms import Abs, App, LambdaTerm, Var, alpha_equal, free_vars, substitute, term_size


class _Budget:
    """Счётчик β-шагов"""

    def __init__(self, limit: int):
        self.limit = limit
        self.used = 0

    def tick(self):
        self.used += 1
        if self.used > self.limit:
            raise StepBudgetExceeded(
                f"β-нормализация превысила {self.limit} шагов; терм, вероятно, нелинеен"
            )


def _beta(t: LambdaTerm, budget: _Budget) -> LambdaTerm:
    if isinstance(t, Var):
        return t
    if isinstance(t, Abs):
        return Abs(t.binder, _beta(t.body, budget))
    fn = _beta(t.fn, budget)
    if isinstance(fn, Abs):
        budget.tick()
        return _beta(substitute(fn.body, fn.binder, t.arg), budget)
    return App(fn, _beta(t.arg, budget))


def beta_normalize(t: LambdaTerm) -> LambdaTerm:
    """
    Приводит терм к β-нормальной форме.

    Для линейных термов каждый шаг уменьшает размер, поэтому лимит |t|²
    никогда не достигается.

    Args:
        t: Линейный терм

    Returns:
        β-нормальная форма

    Raises:
        StepBudgetExceeded: Лимит шагов исчерпан
    """
    size = term_size(t)
    return _beta(t, _Budget(max(size * size, 1)))


def eta_normalize(t: LambdaTerm) -> LambdaTerm:
    """
    Полная η-редукция снизу вверх: λx. M x ↦ M при x ∉ FV(M).

    Args:
        t: β-нормальный терм

    Returns:
        η-нормальная форма
    """
    if isinstance(t, Var):
        return t
    if isinstance(t, App):
        return App(eta_normalize(t.fn), eta_normalize(t.arg))
    body = eta_normalize(t.body)
    if (
        isinstance(body, App)
        and isinstance(body.arg, Var)
        and body.arg.name == t.binder
        and t.binder not in free_vars(body.fn)
    ):
        return body.fn
    return Abs(t.binder, body)


def betaeta_normalize(t: LambdaTerm) -> LambdaTerm:
    """βη-нормальная форма"""
    return eta_normalize(beta_normalize(t))


def betaeta_equal(s: LambdaTerm, t: LambdaTerm) -> bool:
    """
    Проверяет s =βη t.

    Args:
        s: Линейный терм
        t: Линейный терм

    Returns:
        True, если βη-нормальные формы α-равны
    """
    return alpha_equal(betaeta_normalize(s), betaeta_normalize(t))
