"""
Команда similar: подобие нормальных форм
"""
from typing import ClassVar

from pydantic import BaseModel, Field

from src.normalizer import normal_form
from src.similarity import format_similarity, similar
from .common import CommandResult, type_argument


class SimilarCommand(BaseModel):
    """Нормализует оба типа и ищет вывод подобия"""

    command_name: ClassVar[str] = "similar"

    left: str = Field(description="Тип A")
    right: str = Field(description="Тип B")
    strong: bool = Field(default=False, description="Только тождественные перестановки")
    derivation: bool = Field(default=False, description="Печатать вывод подобия")

    def process(self) -> CommandResult:
        h = normal_form(type_argument(self.left))
        k = normal_form(type_argument(self.right))
        found = similar(h, k, self.strong)
        if found is None:
            return CommandResult.negative("not similar")
        lines = ["similar"]
        if self.derivation:
            lines += format_similarity(found)
        return CommandResult.positive(*lines)
