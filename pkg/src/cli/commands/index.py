"""
Команды index-build и index-query
"""
from pathlib import Path
from typing import ClassVar

from pydantic import BaseModel, Field

from src.common.errors import CorpusReadError, IndexFormatError, PreconditionError
from src.lambda_core import beta_normalize, print_term
from src.search_index import build_index, load_index, query, save_index
from src.type_core import print_type
from .common import CommandResult, type_argument


class IndexBuildCommand(BaseModel):
    """Строит индекс сигнатур по корпусу `имя : тип` и сохраняет его"""

    command_name: ClassVar[str] = "index-build"

    corpus: str = Field(description="Файл корпуса")
    output: str = Field(description="Файл индекса")

    def process(self) -> CommandResult:
        try:
            with open(self.corpus, encoding="utf-8") as stream:
                ix = build_index(stream)
        except OSError as e:
            raise CorpusReadError(f"Не удалось открыть корпус {self.corpus}: {e}")
        try:
            save_index(ix, Path(self.output))
        except OSError as e:
            raise PreconditionError(f"Не удалось записать индекс {self.output}: {e}")
        return CommandResult.positive(f"{len(ix)} entries, {len(ix.skipped)} skipped")


class IndexQueryCommand(BaseModel):
    """Ищет в индексе функции с типом, изоморфным запросу"""

    command_name: ClassVar[str] = "index-query"

    index: str = Field(description="Файл индекса")
    type_text: str = Field(description="Тип запроса или @файл")
    strong: bool = Field(default=False, description="Только сильные изоморфизмы")

    def process(self) -> CommandResult:
        try:
            ix = load_index(self.index)
        except OSError as e:
            raise IndexFormatError(f"Не удалось прочитать индекс {self.index}: {e}")
        hits = query(ix, type_argument(self.type_text), self.strong)
        if not hits:
            return CommandResult.negative()
        return CommandResult.positive(*[
            f"{hit.name}\t{print_type(hit.declared)}\t{print_term(beta_normalize(hit.witness.fwd))}"
            for hit in hits
        ])
