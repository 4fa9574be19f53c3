"""
Индекс сигнатур и поиск по типу с точностью до изоморфизма
"""
import hashlib
import re
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Mapping, Optional, TextIO, Tuple, Union

from src.common.errors import CorpusReadError, TypeSyntaxError
from src.config import get_index_workers
from src.normalizer import normal_form
from src.services.logger_service import logger
from src.synthesis import IsoWitness, synthesize_iso
from src.type_core import TypeExpr, parse_type, print_type
from .keys import coarse_key

_LINE_PATTERN = re.compile(r"^\s*(?P<name>[^\s:#]+)\s*:\s*(?P<type>.+?)\s*$")


@dataclass(frozen=True)
class SignatureEntry:
    """Запись корпуса: имя, объявленный тип, нормальная форма и грубый ключ"""
    name: str
    declared: TypeExpr
    normal: object
    coarse_key: str

    @classmethod
    def from_declaration(cls, name: str, declared: TypeExpr) -> "SignatureEntry":
        normal = normal_form(declared)
        return cls(name, declared, normal, coarse_key(normal))


@dataclass(frozen=True)
class QueryHit:
    """Найденная функция и проверенная коэрция из запроса в её тип"""
    name: str
    declared: TypeExpr
    witness: IsoWitness
    exact: bool


@dataclass(frozen=True)
class Index:
    """
    Неизменяемый индекс: записи в порядке корпуса и корзины по грубому ключу.

    Attributes:
        entries: Записи в порядке строк корпуса
        digest: sha256 текста корпуса
        skipped: Диагностики пропущенных строк
    """
    entries: Tuple[SignatureEntry, ...]
    digest: str
    skipped: Tuple[str, ...] = ()
    buckets: Mapping[str, Tuple[SignatureEntry, ...]] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        grouped: Dict[str, List[SignatureEntry]] = {}
        for entry in self.entries:
            grouped.setdefault(entry.coarse_key, []).append(entry)
        object.__setattr__(self, "buckets", {key: tuple(items) for key, items in grouped.items()})

    def __len__(self) -> int:
        return len(self.entries)

    def candidates(self, key: str) -> Tuple[SignatureEntry, ...]:
        return self.buckets.get(key, ())


def corpus_digest(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def _read_corpus(corpus: Union[str, TextIO, Iterable[str]]) -> str:
    try:
        if isinstance(corpus, str):
            return corpus
        if hasattr(corpus, "read"):
            return corpus.read()
        return "".join(line if line.endswith("\n") else line + "\n" for line in corpus)
    except (OSError, UnicodeDecodeError) as e:
        raise CorpusReadError(f"Не удалось прочитать корпус: {e}")


def _ingest(number: int, line: str) -> Union[SignatureEntry, str, None]:
    stripped = line.strip()
    if not stripped or stripped.startswith("#"):
        return None
    match = _LINE_PATTERN.match(stripped)
    if not match:
        return f"строка {number}: ожидалось `имя : тип`"
    try:
        declared = parse_type(match.group("type"))
    except TypeSyntaxError as e:
        return f"строка {number}: {e}"
    return SignatureEntry.from_declaration(match.group("name"), declared)


def build_index(corpus: Union[str, TextIO, Iterable[str]], workers: Optional[int] = None) -> Index:
    """
    Строит индекс по корпусу строк `имя : тип`.

    Строки обрабатываются в пуле потоков; результаты собираются в порядке корпуса,
    поэтому индекс не зависит от числа потоков.

    Args:
        corpus: Текст, текстовый поток или итерируемое строк
        workers: Число потоков (по умолчанию ISO_INDEX_WORKERS)

    Returns:
        Index

    Raises:
        CorpusReadError: Поток не читается
    """
    text = _read_corpus(corpus)
    lines = text.splitlines()
    numbers = range(1, len(lines) + 1)
    workers = workers or get_index_workers()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_ingest, numbers, lines))
    else:
        results = [_ingest(number, line) for number, line in zip(numbers, lines)]

    entries = tuple(r for r in results if isinstance(r, SignatureEntry))
    skipped = tuple(r for r in results if isinstance(r, str))
    for diagnostic in skipped:
        logger.warning(f"Пропущена строка корпуса, {diagnostic}")
    logger.index("Индекс построен", len(entries))
    return Index(entries, corpus_digest(text), skipped)


def query(ix: Index, q: TypeExpr, strong_only: bool = False) -> List[QueryHit]:
    """
    Ищет функции, тип которых изоморфен запросу.

    Args:
        ix: Индекс
        q: Тип запроса
        strong_only: Только сильные изоморфизмы

    Returns:
        Попадания с проверенными свидетелями q ≈ declared; сначала совпадения
        нормальных форм, затем остальные в порядке корпуса. Пустой список не означает,
        что изоморфных функций нет.
    """
    normal = normal_form(q)
    key = coarse_key(normal)
    candidates = ix.candidates(key)
    logger.search("Запрос к индексу", f"{print_type(q)} ключ={key} кандидатов={len(candidates)}")

    hits = []
    for entry in candidates:
        witness = synthesize_iso(q, entry.declared, strong_only)
        if witness is not None:
            hits.append(QueryHit(entry.name, entry.declared, witness, entry.normal == normal))
    hits.sort(key=lambda hit: not hit.exact)
    return hits
