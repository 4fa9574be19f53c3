"""
Команда iso: синтез пары коэрций
"""
from typing import ClassVar

from pydantic import BaseModel, Field

from src.derivations import dump_derivation, emit_witness_derivations
from src.lambda_core import beta_normalize, print_term
from src.services.logger_service import logger
from src.synthesis import synthesize_iso
from .common import CommandResult, type_argument

NO_WITNESS = "no witness found (similarity-incomplete)"


class IsoCommand(BaseModel):
    """Синтезирует проверенную пару взаимно обратных коэрций между типами"""

    command_name: ClassVar[str] = "iso"

    left: str = Field(description="Тип A")
    right: str = Field(description="Тип B")
    strong: bool = Field(default=False, description="Только сильный изоморфизм")
    emit_derivation: bool = Field(default=False, description="Печатать выводы типов для обеих коэрций")

    def process(self) -> CommandResult:
        witness = synthesize_iso(type_argument(self.left), type_argument(self.right), self.strong)
        if witness is None:
            return CommandResult.negative(NO_WITNESS)
        lines = [print_term(beta_normalize(witness.fwd)), print_term(beta_normalize(witness.bwd))]
        logger.info("Изоморфизм найден", f"strong={witness.strong} provenance={witness.provenance.value}")
        if self.emit_derivation:
            derivations = emit_witness_derivations(witness)
            if derivations is None:
                logger.warning("Вывод типов для коэрций не построен")
            else:
                for derivation in derivations:
                    lines.append("")
                    lines.append(dump_derivation(derivation))
        return CommandResult.positive(*lines)
