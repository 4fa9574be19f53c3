"""
Нормализация типов: стратегия самого внутреннего левого редекса, сертификаты и сравнение нормальных форм
"""
from functools import lru_cache
from typing import Callable, List, Optional, Sequence, Tuple

from src.common.errors import InverseVerificationError, StepBudgetExceeded
from src.config import should_check_rewrite_measure
from src.lambda_core import LambdaTerm, PermTree, verify_inverse_pair
from src.preorder import leq_witness_tree
from src.services.logger_service import logger
from src.type_core import TypeContext, TypeExpr, canonicalize, print_type, size, to_expr
from .certificate import NormCertificate, RewriteStep, compose_fhi, lift_through_context
from .ordering import rpo_greater
from .rules import Redex, find_redexes_canonical

Strategy = Callable[[Sequence[Redex]], Redex]


def innermost_leftmost(redexes: Sequence[Redex]) -> Redex:
    """Стратегия по умолчанию: первый редекс в обратном порядке обхода"""
    return redexes[0]


def _to_step(source: TypeExpr, redex: Redex) -> RewriteStep:
    fwd, bwd = lift_through_context(redex.path, redex.fwd, redex.bwd)
    return RewriteStep(
        rule=redex.rule,
        position=TypeContext(source, redex.path),
        before=to_expr(redex.before),
        after=to_expr(redex.after),
        fwd=fwd,
        bwd=bwd,
    )


def find_redexes(t: TypeExpr) -> List[RewriteStep]:
    """
    Все применимые шаги для AC-канонической формы типа.

    Позиции адресуют узлы в to_expr(canonicalize(t)).

    Args:
        t: Тип

    Returns:
        Шаги в порядке обхода «дети раньше родителя»
    """
    current = canonicalize(t)
    source = to_expr(current)
    return [_to_step(source, redex) for redex in find_redexes_canonical(current)]


def _ac_witnesses(s: TypeExpr, t: TypeExpr) -> Tuple[PermTree, PermTree]:
    return leq_witness_tree(s, t), leq_witness_tree(t, s)


def normalize(t: TypeExpr, strategy: Optional[Strategy] = None):
    """
    Переписывает тип до нормальной формы и собирает сертификат.

    Args:
        t: Тип
        strategy: Выбор редекса из списка; по умолчанию самый внутренний левый

    Returns:
        Пара (каноническая нормальная форма, NormCertificate), где
        ⊢ witness_fwd : t → to_expr(nf)

    Raises:
        StepBudgetExceeded: Превышен лимит 2^size шагов
    """
    choose = strategy or innermost_leftmost
    check_measure = should_check_rewrite_measure()
    budget = 2 ** size(t)

    current = canonicalize(t)
    fwd, bwd = _ac_witnesses(t, to_expr(current))
    fwd_parts = [fwd]
    bwd_parts = [bwd]
    steps: List[RewriteStep] = []

    while True:
        redexes = find_redexes_canonical(current)
        if not redexes:
            break
        if len(steps) >= budget:
            raise StepBudgetExceeded(
                f"Нормализация {print_type(t)} не завершилась за {budget} шагов"
            )
        source = to_expr(current)
        step = _to_step(source, choose(redexes))
        logger.rewrite(step.rule.value, step.position.describe())

        following = canonicalize(step.target)
        if check_measure and not rpo_greater(current, following):
            raise AssertionError(f"Мера не убывает на шаге {step.describe()}")
        ac_fwd, ac_bwd = _ac_witnesses(step.target, to_expr(following))
        fwd_parts.extend((step.fwd, ac_fwd))
        bwd_parts.extend((step.bwd, ac_bwd))
        steps.append(step)
        current = following

    certificate = NormCertificate(
        steps=tuple(steps),
        fwd_tree=compose_fhi(fwd_parts),
        bwd_tree=compose_fhi(bwd_parts),
    )
    return current, certificate


@lru_cache(maxsize=65536)
def _normal_form_canonical(c):
    return normalize(to_expr(c))[0]


def normal_form(t: TypeExpr):
    """Каноническая нормальная форма типа"""
    return _normal_form_canonical(canonicalize(t))


def nf_equal(s: TypeExpr, t: TypeExpr) -> bool:
    """
    Совпадение нормальных форм по модулю AC.

    Args:
        s: Тип
        t: Тип

    Returns:
        True, если канонические нормальные формы равны
    """
    return normal_form(s) == normal_form(t)


def iso_to_nf(t: TypeExpr) -> Tuple[LambdaTerm, LambdaTerm]:
    """
    Пара взаимно обратных FHI между типом и его нормальной формой.

    Args:
        t: Тип

    Returns:
        (w, w⁻¹) с ⊢ w : t → nf(t) и ⊢ w⁻¹ : nf(t) → t
    """
    _, certificate = normalize(t)
    fwd, bwd = certificate.witness_fwd, certificate.witness_bwd
    if not verify_inverse_pair(fwd, bwd):
        raise InverseVerificationError("Свидетели нормализации не взаимно обратны")
    return fwd, bwd
