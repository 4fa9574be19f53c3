"""
Общие модули и утилиты
"""
from .errors import (
    IsoToolkitError,
    TypeSyntaxError,
    TypeAmbiguityError,
    TermSyntaxError,
    StepBudgetExceeded,
    FhpPreconditionError,
    InverseVerificationError,
    NotNormalError,
    MalformedDerivationError,
    PreconditionError,
    IndexFormatError,
    IndexVersionError,
    CorpusReadError,
)

__all__ = [
    "IsoToolkitError",
    "TypeSyntaxError",
    "TypeAmbiguityError",
    "TermSyntaxError",
    "StepBudgetExceeded",
    "FhpPreconditionError",
    "InverseVerificationError",
    "NotNormalError",
    "MalformedDerivationError",
    "PreconditionError",
    "IndexFormatError",
    "IndexVersionError",
    "CorpusReadError",
]
