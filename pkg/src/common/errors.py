"""
Исключения библиотеки
"""
from typing import Optional


class IsoToolkitError(Exception):
    """Базовое исключение для всех ошибок библиотеки"""


class _PositionedError(IsoToolkitError):
    """Ошибка разбора с позицией во входной строке"""

    def __init__(self, message: str, position: Optional[int] = None):
        self.position = position
        if position is not None:
            message = f"{message} (позиция {position})"
        super().__init__(message)


class TypeSyntaxError(_PositionedError):
    """Синтаксическая ошибка в записи типа"""


class TypeAmbiguityError(TypeSyntaxError):
    """Смешение & и | на одном уровне без скобок"""


class TermSyntaxError(_PositionedError):
    """Синтаксическая ошибка в записи λ-терма"""


class StepBudgetExceeded(IsoToolkitError):
    """Превышен лимит шагов редукции (сигнализирует об ошибке в реализации)"""


class FhpPreconditionError(IsoToolkitError):
    """Аргумент не является конечным наследственным перестановщиком"""


class InverseVerificationError(IsoToolkitError):
    """Построенная пара термов не прошла βη-проверку обратимости"""


class NotNormalError(IsoToolkitError):
    """Тип не находится в нормальной форме"""


class MalformedDerivationError(IsoToolkitError):
    """Дерево вывода или подобия построено некорректно"""


class PreconditionError(IsoToolkitError):
    """Нарушено предусловие операции"""


class IndexFormatError(IsoToolkitError):
    """Файл индекса повреждён"""


class IndexVersionError(IndexFormatError):
    """Файл индекса записан более новой версией формата"""


class CorpusReadError(IsoToolkitError):
    """Не удалось прочитать корпус сигнатур"""
