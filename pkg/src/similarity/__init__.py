"""Отношение подобия нормальных типов."""
from src.normalizer import NormalClass, classify, is_normal
from .derivation import (
    ArrowPerm,
    MergeAnd,
    MergeOr,
    Refl,
    SimilarityDerivation,
    check_similarity,
    format_similarity,
    uses_only_identity,
)
from .views import arrow_view, spine_length
from .search import similar, similar_sequences

__all__ = [
    "NormalClass", "classify", "is_normal", "ArrowPerm", "MergeAnd", "MergeOr", "Refl",
    "SimilarityDerivation", "check_similarity", "format_similarity", "uses_only_identity",
    "arrow_view", "spine_length", "similar", "similar_sequences",
]
