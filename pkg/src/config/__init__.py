"""Модуль конфигурации."""
from .iso_config import (
    get_index_workers,
    get_similarity_max_arity,
    should_check_rewrite_measure,
    INDEX_FORMAT_VERSION,
)

__all__ = [
    "get_index_workers",
    "get_similarity_max_arity",
    "should_check_rewrite_measure",
    "INDEX_FORMAT_VERSION",
]
