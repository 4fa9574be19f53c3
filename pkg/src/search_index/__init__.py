"""Индекс сигнатур и поиск функций по типу с точностью до изоморфизма."""
from .keys import coarse_key
from .index import Index, QueryHit, SignatureEntry, build_index, corpus_digest, query
from .storage import load_index, save_index

__all__ = [
    "coarse_key", "Index", "QueryHit", "SignatureEntry", "build_index", "corpus_digest",
    "query", "load_index", "save_index",
]
