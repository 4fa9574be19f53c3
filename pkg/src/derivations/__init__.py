"""Деревья вывода типов, их проверка и построение для перестановщиков."""
from .nodes import Env, RuleTag, TypingDerivation, make_env
from .checker import CheckResult, check_derivation
from .builder import (
    DerivationBuilder,
    cut,
    cut_as_redex,
    derive_coercion,
    emit_fhp_derivation,
    emit_leq_derivation,
    emit_witness_derivations,
)
from .serialization import dump_derivation, load_derivation

__all__ = [
    "Env", "RuleTag", "TypingDerivation", "make_env", "CheckResult", "check_derivation",
    "DerivationBuilder", "cut", "cut_as_redex", "derive_coercion", "emit_fhp_derivation",
    "emit_leq_derivation", "emit_witness_derivations", "dump_derivation", "load_derivation",
]
