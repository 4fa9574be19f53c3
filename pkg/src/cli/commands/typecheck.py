"""
Команда typecheck: проверка сохранённого вывода типов
"""
from typing import ClassVar

from pydantic import BaseModel, Field

from src.derivations import check_derivation, load_derivation
from .common import CommandResult, read_argument


class TypecheckCommand(BaseModel):
    """Проверяет сохранённый вывод типа узел за узлом"""

    command_name: ClassVar[str] = "typecheck"

    path: str = Field(description="Файл с выводом")

    def process(self) -> CommandResult:
        derivation = load_derivation(read_argument("@" + self.path))
        result = check_derivation(derivation)
        if result:
            return CommandResult.positive("ok")
        return CommandResult.negative(result.diagnostic)
