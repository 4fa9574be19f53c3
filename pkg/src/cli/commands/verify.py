"""
Команда verify: проверка пары взаимно обратных термов
"""
from typing import ClassVar

from pydantic import BaseModel, Field

from src.lambda_core import verify_inverse_pair
from .common import CommandResult, term_argument


class VerifyCommand(BaseModel):
    """Проверяет, что P ∘ Q и Q ∘ P βη-равны тождеству"""

    command_name: ClassVar[str] = "verify"

    fwd: str = Field(description="Терм P или @файл")
    bwd: str = Field(description="Терм Q или @файл")

    def process(self) -> CommandResult:
        if verify_inverse_pair(term_argument(self.fwd), term_argument(self.bwd)):
            return CommandResult.positive("inverse")
        return CommandResult.negative("not inverse")
