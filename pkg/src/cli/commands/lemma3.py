"""
Команда lemma3: стандартные сильные изоморфизмы
"""
from typing import ClassVar, List

from pydantic import BaseModel, Field

from src.lambda_core import print_term
from src.type_core import print_type
from src.synthesis import lemma3_witness
from .common import CommandResult, type_argument


class Lemma3Command(BaseModel):
    """Инстанцирует стандартный сильный изоморфизм (comm∧, dist→∨, erase∨, …) и печатает пару"""

    command_name: ClassVar[str] = "lemma3"

    name: str = Field(description="Имя изоморфизма или ASCII-псевдоним")
    params: List[str] = Field(default_factory=list, description="Типы-параметры")

    def process(self) -> CommandResult:
        witness = lemma3_witness(self.name, [type_argument(p) for p in self.params])
        return CommandResult.positive(
            f"{print_type(witness.source)} ≈ {print_type(witness.target)}",
            print_term(witness.fwd),
            print_term(witness.bwd),
        )
