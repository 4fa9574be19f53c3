"""
Команда leq: проверка предпорядка A ≤ B
"""
from typing import ClassVar

from pydantic import BaseModel, Field

from src.lambda_core import print_term
from src.preorder import leq, leq_witness
from .common import CommandResult, type_argument


class LeqCommand(BaseModel):
    """Проверяет left ≤ right; с --witness печатает FHI-коэрцию"""

    command_name: ClassVar[str] = "leq"

    left: str = Field(description="Тип A")
    right: str = Field(description="Тип B")
    witness: bool = Field(default=False, description="Печатать FHI-свидетель")

    def process(self) -> CommandResult:
        s, t = type_argument(self.left), type_argument(self.right)
        if not leq(s, t):
            return CommandResult.negative("false")
        lines = ["true"]
        if self.witness:
            lines.append(print_term(leq_witness(s, t)))
        return CommandResult.positive(*lines)
