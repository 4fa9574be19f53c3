"""
Команда nf: нормальная форма и сертификат нормализации
"""
from typing import ClassVar

from pydantic import BaseModel, Field

from src.lambda_core import print_term
from src.normalizer import normalize
from src.type_core import print_type
from .common import CommandResult, type_argument


class NormalFormCommand(BaseModel):
    """Нормализует тип; с --trace печатает шаги переписывания и пару свидетелей"""

    command_name: ClassVar[str] = "nf"

    type_text: str = Field(description="Тип или @файл")
    trace: bool = Field(default=False, description="Печатать шаги переписывания")

    def process(self) -> CommandResult:
        normal, certificate = normalize(type_argument(self.type_text))
        lines = [print_type(normal)]
        if self.trace:
            lines += [step.describe() for step in certificate.steps]
            lines.append(f"fwd: {print_term(certificate.witness_fwd)}")
            lines.append(f"bwd: {print_term(certificate.witness_bwd)}")
        return CommandResult.positive(*lines)
