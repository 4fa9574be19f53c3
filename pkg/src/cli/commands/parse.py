"""
Команда parse: разбор и печать типа
"""
from typing import ClassVar

from pydantic import BaseModel, Field

from src.type_core import canonicalize, print_full, print_type
from .common import CommandResult, type_argument


class ParseCommand(BaseModel):
    """Печатает тип с минимумом скобок, с полной расстановкой скобок и в AC-канонической форме"""

    command_name: ClassVar[str] = "parse"

    type_text: str = Field(description="Тип или @файл")

    def process(self) -> CommandResult:
        t = type_argument(self.type_text)
        return CommandResult.positive(
            print_type(t),
            print_full(t),
            print_type(canonicalize(t)),
        )
