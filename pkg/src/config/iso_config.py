"""Конфигурация библиотеки на базе переменных окружения."""

import logging
import os

logger = logging.getLogger(__name__)

# Версия формата файла индекса; не настраивается
INDEX_FORMAT_VERSION = 1


def _read_int(name: str, default: int, minimum: int = 0) -> int:
    """
    Читает целое неотрицательное значение из окружения.

    Args:
        name: Имя переменной окружения
        default: Значение по умолчанию
        minimum: Минимально допустимое значение

    Returns:
        Значение переменной или default, если она не задана или некорректна
    """
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        value = int(raw.strip())
    except ValueError:
        logger.error("%s должен быть числом, получено: %s", name, raw)
        return default
    if value < minimum:
        logger.warning("%s меньше %d, используется %d", name, minimum, default)
        return default
    return value


def get_index_workers() -> int:
    """
    Получает число потоков для построения индекса.

    Returns:
        Число потоков (по умолчанию 1)
    """
    return _read_int("ISO_INDEX_WORKERS", 1, minimum=1)


def get_similarity_max_arity() -> int:
    """
    Получает верхнюю границу арности в правиле стрелок при поиске подобия.

    Returns:
        Граница арности; 0 означает «ограничено только длиной стрелочного хребта»
    """
    return _read_int("ISO_SIMILARITY_MAX_ARITY", 0)


def should_check_rewrite_measure() -> bool:
    """
    Проверять ли убывание меры упорядочения путей на каждом шаге нормализации.

    По умолчанию выключено; при включении normalize в rewriter.py сравнивает
    соседние типы через rpo_greater и падает с AssertionError.

    Returns:
        True, если ISO_NORMALIZE_CHECK_MEASURE=true (по умолчанию false)
    """
    return os.getenv("ISO_NORMALIZE_CHECK_MEASURE", "false").strip().lower() == "true"
