"""
Команда equiv: семантическая эквивалентность ≃
"""
from typing import ClassVar

from pydantic import BaseModel, Field

from src.type_core import print_type, sem_canon, sem_equiv
from .common import CommandResult, type_argument


class EquivCommand(BaseModel):
    """Проверяет left ≃ right и печатает ≃-каноническую форму обеих сторон"""

    command_name: ClassVar[str] = "equiv"

    left: str = Field(description="Тип A")
    right: str = Field(description="Тип B")

    def process(self) -> CommandResult:
        s, t = type_argument(self.left), type_argument(self.right)
        forms = [print_type(sem_canon(s)), print_type(sem_canon(t))]
        if sem_equiv(s, t):
            return CommandResult.positive("true", *forms)
        return CommandResult.negative("false", *forms)
