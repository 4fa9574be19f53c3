"""Система переписывания типов к нормальной форме."""
from .rules import Redex, RuleTag, find_redexes_canonical
from .certificate import NormCertificate, RewriteStep, compose_fhi, lift_through_context
from .ordering import NormalClass, classify, is_normal, label, rpo_greater
from .rewriter import (
    find_redexes,
    innermost_leftmost,
    iso_to_nf,
    nf_equal,
    normal_form,
    normalize,
)

__all__ = [
    "Redex", "RuleTag", "find_redexes_canonical", "NormCertificate", "RewriteStep",
    "compose_fhi", "lift_through_context", "NormalClass", "classify", "is_normal", "label",
    "rpo_greater", "find_redexes", "innermost_leftmost", "iso_to_nf", "nf_equal",
    "normal_form", "normalize",
]
