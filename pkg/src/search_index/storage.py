"""
Текстовый формат файла индекса: заголовок с версией, дайджест корпуса, записи
"""
import re
from pathlib import Path
from typing import Union

from src.common.errors import IndexFormatError, IndexVersionError, TypeSyntaxError
from src.config import INDEX_FORMAT_VERSION
from src.services.logger_service import logger
from src.type_core import parse_type, print_type
from .index import Index, SignatureEntry

_HEADER_PATTERN = re.compile(r"^ISOIDX v(?P<version>\d+)$")
_DIGEST_PATTERN = re.compile(r"^digest (?P<digest>[0-9a-f]{64})$")


def save_index(ix: Index, path: Union[str, Path]) -> None:
    """
    Сохраняет индекс: `ISOIDX v1`, строка `digest <sha256>`, затем
    `ключ<TAB>имя<TAB>тип` на каждую запись

    Raises:
        OSError: Ошибка записи
    """
    lines = [f"ISOIDX v{INDEX_FORMAT_VERSION}", f"digest {ix.digest}"]
    lines += [f"{e.coarse_key}\t{e.name}\t{print_type(e.declared)}" for e in ix.entries]
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")
    logger.index(f"Индекс сохранён в {path}", len(ix))


def load_index(path: Union[str, Path]) -> Index:
    """
    Загружает индекс, заново вычисляя нормальные формы и сверяя ключи.

    Args:
        path: Путь к файлу индекса

    Returns:
        Index

    Raises:
        IndexVersionError: Версия формата не поддерживается
        IndexFormatError: Файл повреждён
        OSError: Ошибка чтения
    """
    try:
        lines = Path(path).read_text(encoding="utf-8").splitlines()
    except UnicodeDecodeError as e:
        raise IndexFormatError(f"Файл индекса не в UTF-8: {e}")
    if not lines:
        raise IndexFormatError("Пустой файл индекса")

    header = _HEADER_PATTERN.match(lines[0])
    if not header:
        raise IndexFormatError(f"Неверный заголовок индекса: {lines[0]!r}")
    version = int(header.group("version"))
    if version != INDEX_FORMAT_VERSION:
        raise IndexVersionError(
            f"Версия формата {version} не поддерживается (ожидалась {INDEX_FORMAT_VERSION})"
        )
    digest = _DIGEST_PATTERN.match(lines[1]) if len(lines) > 1 else None
    if not digest:
        raise IndexFormatError("Отсутствует строка digest")

    entries = []
    for number, line in enumerate(lines[2:], start=3):
        if not line:
            continue
        parts = line.split("\t")
        if len(parts) != 3:
            raise IndexFormatError(f"строка {number}: ожидалось три поля через TAB")
        key, name, printed = parts
        try:
            entry = SignatureEntry.from_declaration(name, parse_type(printed))
        except TypeSyntaxError as e:
            raise IndexFormatError(f"строка {number}: {e}")
        if entry.coarse_key != key:
            raise IndexFormatError(f"строка {number}: ключ {key!r} не совпадает с типом")
        entries.append(entry)
    logger.index(f"Индекс загружен из {path}", len(entries))
    return Index(tuple(entries), digest.group("digest"))
