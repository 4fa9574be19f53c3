"""
Сквозной синтез: нормализация, поиск подобия, построение и проверка пары FHP
"""
from typing import Optional

from src.common.errors import InverseVerificationError
from src.lambda_core import IDENTITY, fhp_compose, print_term, verify_inverse_pair
from src.normalizer import normalize
from src.services.logger_service import logger
from src.similarity import Refl, similar
from src.type_core import TypeExpr, canonicalize, print_type
from .witness import IsoWitness, Provenance, derivation_to_fhp_pair, is_strong_pair


def _checked(witness: IsoWitness) -> IsoWitness:
    if not verify_inverse_pair(witness.fwd, witness.bwd):
        logger.error(
            "Синтезированная пара не взаимно обратна",
            f"{print_term(witness.fwd)} / {print_term(witness.bwd)}",
        )
        raise InverseVerificationError(
            f"Пара для {print_type(witness.source)} ≈ {print_type(witness.target)} не прошла проверку"
        )
    return witness


def synthesize_iso(s: TypeExpr, t: TypeExpr, strong_only: bool = False) -> Optional[IsoWitness]:
    """
    Ищет пару FHP, доказывающую s ≈ t, через подобие нормальных форм.

    fwd = (c_t.bwd) ∘ P ∘ (c_s.fwd), bwd = (c_s.bwd) ∘ P⁻¹ ∘ (c_t.fwd), где c_s, c_t являются
    сертификатами нормализации, а (P, P⁻¹) построены по выводу подобия.

    Args:
        s: Исходный тип
        t: Целевой тип
        strong_only: Искать только сильный изоморфизм (FHI)

    Returns:
        Проверенный свидетель или None; None не доказывает отсутствие изоморфизма

    Raises:
        InverseVerificationError: Построенная пара не прошла βη-проверку
    """
    if s == t:
        canonical = canonicalize(s)
        return IsoWitness(
            source=s,
            target=t,
            fwd=IDENTITY,
            bwd=IDENTITY,
            strong=True,
            provenance=Provenance.SIMILARITY,
            derivation=Refl((canonical,), (canonical,)),
        )

    nf_s, cert_s = normalize(s)
    nf_t, cert_t = normalize(t)
    derivation = similar(nf_s, nf_t, strong_only)
    if derivation is None:
        return None

    p, p_inv = derivation_to_fhp_pair(derivation)
    fwd = fhp_compose(cert_t.witness_bwd, fhp_compose(p, cert_s.witness_fwd))
    bwd = fhp_compose(cert_s.witness_bwd, fhp_compose(p_inv, cert_t.witness_fwd))
    witness = IsoWitness(
        source=s,
        target=t,
        fwd=fwd,
        bwd=bwd,
        strong=is_strong_pair(fwd, bwd),
        provenance=Provenance.SIMILARITY,
        derivation=derivation,
    )
    return _checked(witness)


def compose_witnesses(first: IsoWitness, second: IsoWitness) -> IsoWitness:
    """
    Транзитивность: из s ≈ t и t ≈ u получает s ≈ u.

    Raises:
        InverseVerificationError: Композиция не прошла проверку
    """
    fwd = fhp_compose(second.fwd, first.fwd)
    bwd = fhp_compose(first.bwd, second.bwd)
    return _checked(
        IsoWitness(
            source=first.source,
            target=second.target,
            fwd=fwd,
            bwd=bwd,
            strong=is_strong_pair(fwd, bwd),
            provenance=Provenance.SIMILARITY,
            detail="composition",
        )
    )
