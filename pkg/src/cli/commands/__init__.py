"""
Команды CLI
"""
from .common import CommandResult, read_argument
from .parse import ParseCommand
from .normal_form import NormalFormCommand
from .leq import LeqCommand
from .equiv import EquivCommand
from .similar import SimilarCommand
from .iso import NO_WITNESS, IsoCommand
from .verify import VerifyCommand
from .typecheck import TypecheckCommand
from .lemma3 import Lemma3Command
from .index import IndexBuildCommand, IndexQueryCommand

__all__ = [
    "CommandResult", "read_argument", "ParseCommand", "NormalFormCommand", "LeqCommand",
    "EquivCommand", "SimilarCommand", "NO_WITNESS", "IsoCommand", "VerifyCommand",
    "TypecheckCommand", "Lemma3Command", "IndexBuildCommand", "IndexQueryCommand",
]
