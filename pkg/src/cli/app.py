"""
Разбор командной строки и запуск команд
"""
import argparse
import sys
from typing import Callable, Dict, Optional, Sequence, TextIO

from pydantic import ValidationError

from src.common.errors import IsoToolkitError
from src.services.error_checker import EXIT_INTERNAL_ERROR, EXIT_USER_ERROR, ErrorChecker
from src.services.logger_service import logger
from .registry import get_registry


def _add_parse(sub):
    sub.add_argument("type_text", metavar="TYPE")


def _add_nf(sub):
    sub.add_argument("type_text", metavar="TYPE")
    sub.add_argument("--trace", action="store_true", help="печатать шаги и свидетели")


def _add_leq(sub):
    sub.add_argument("left", metavar="A")
    sub.add_argument("right", metavar="B")
    sub.add_argument("--witness", action="store_true", help="печатать FHI-свидетель")


def _add_equiv(sub):
    sub.add_argument("left", metavar="A")
    sub.add_argument("right", metavar="B")


def _add_similar(sub):
    _add_equiv(sub)
    sub.add_argument("--strong", action="store_true", help="только тождественные перестановки")
    sub.add_argument("--derivation", action="store_true", help="печатать вывод подобия")


def _add_iso(sub):
    _add_equiv(sub)
    sub.add_argument("--strong", action="store_true", help="только сильный изоморфизм")
    sub.add_argument("--emit-derivation", action="store_true", help="печатать выводы типов")


def _add_verify(sub):
    sub.add_argument("fwd", metavar="P")
    sub.add_argument("bwd", metavar="Q")


def _add_typecheck(sub):
    sub.add_argument("path", metavar="FILE")


def _add_lemma3(sub):
    sub.add_argument("name", metavar="NAME")
    sub.add_argument("params", metavar="TYPE", nargs="*")


def _add_index_build(sub):
    sub.add_argument("corpus", metavar="CORPUS")
    sub.add_argument("-o", "--output", required=True, metavar="IDX")


def _add_index_query(sub):
    sub.add_argument("index", metavar="IDX")
    sub.add_argument("type_text", metavar="TYPE")
    sub.add_argument("--strong", action="store_true", help="только сильные изоморфизмы")


_ARGUMENTS: Dict[str, Callable] = {
    "parse": _add_parse,
    "nf": _add_nf,
    "leq": _add_leq,
    "equiv": _add_equiv,
    "similar": _add_similar,
    "iso": _add_iso,
    "verify": _add_verify,
    "typecheck": _add_typecheck,
    "lemma3": _add_lemma3,
    "index-build": _add_index_build,
    "index-query": _add_index_query,
}


def build_parser() -> argparse.ArgumentParser:
    """Парсер со всеми зарегистрированными командами"""
    parser = argparse.ArgumentParser(
        prog="isotoolkit",
        description="Изоморфизмы типов с пересечениями и объединениями",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    registry = get_registry()
    for name in registry.get_command_names():
        command_class = registry.get_command(name)
        sub = subparsers.add_parser(name, help=(command_class.__doc__ or "").strip())
        _ARGUMENTS[name](sub)
    return parser


def run(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None) -> int:
    """
    Выполняет одну команду.

    Args:
        argv: Аргументы без имени программы (по умолчанию sys.argv[1:])
        out: Поток для результата (по умолчанию stdout)

    Returns:
        Код завершения: 0 при положительном ответе, 1 при отрицательном,
        2 при ошибке ввода, 3 при нарушении внутреннего инварианта
    """
    out = out or sys.stdout
    try:
        args = vars(build_parser().parse_args(argv))
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USER_ERROR

    name = args.pop("command")
    command_class = get_registry().get_command(name)
    try:
        command = command_class(**args)
        result = command.process()
    except ValidationError as e:
        logger.error(f"Неверные аргументы команды {name}: {e}")
        return EXIT_USER_ERROR
    except IsoToolkitError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return ErrorChecker.exit_code_for(e)
    except Exception as e:
        logger.error(f"Внутренняя ошибка: {e}", exc_info=True)
        return EXIT_INTERNAL_ERROR

    for line in result.lines:
        print(line, file=out)
    return result.exit_code
