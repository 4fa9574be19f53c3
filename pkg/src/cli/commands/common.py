"""
Общие части команд: результат выполнения и чтение аргументов `@файл`
"""
from pathlib import Path
from typing import List

from pydantic import BaseModel, Field

from src.common.errors import PreconditionError
from src.lambda_core import LambdaTerm, parse_term
from src.services.error_checker import EXIT_NEGATIVE, EXIT_OK
from src.type_core import TypeExpr, parse_type


class CommandResult(BaseModel):
    """Код завершения и строки для stdout"""

    exit_code: int = Field(default=EXIT_OK)
    lines: List[str] = Field(default_factory=list)

    @classmethod
    def positive(cls, *lines: str) -> "CommandResult":
        return cls(exit_code=EXIT_OK, lines=list(lines))

    @classmethod
    def negative(cls, *lines: str) -> "CommandResult":
        return cls(exit_code=EXIT_NEGATIVE, lines=list(lines))


def read_argument(text: str) -> str:
    """
    Значение аргумента; `@путь` читается из файла

    Raises:
        PreconditionError: Файл не читается
    """
    if not text.startswith("@"):
        return text
    try:
        return Path(text[1:]).read_text(encoding="utf-8").strip()
    except (OSError, UnicodeDecodeError) as e:
        raise PreconditionError(f"Не удалось прочитать {text[1:]}: {e}")


def type_argument(text: str) -> TypeExpr:
    return parse_type(read_argument(text))


def term_argument(text: str) -> LambdaTerm:
    return parse_term(read_argument(text))
