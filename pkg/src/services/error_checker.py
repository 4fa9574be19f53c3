"""
Сервис для классификации ошибок и выбора кода завершения
"""
from src.common.errors import (
    CorpusReadError,
    IndexFormatError,
    MalformedDerivationError,
    NotNormalError,
    PreconditionError,
    TermSyntaxError,
    TypeSyntaxError,
)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USER_ERROR = 2
EXIT_INTERNAL_ERROR = 3

# ошибки во входных данных пользователя
_USER_ERRORS = (
    TypeSyntaxError,
    TermSyntaxError,
    PreconditionError,
    IndexFormatError,
    CorpusReadError,
    NotNormalError,
    MalformedDerivationError,
)


class ErrorChecker:
    """Класс для проверки различных типов ошибок"""

    @staticmethod
    def is_user_error(error: BaseException) -> bool:
        """
        Проверяет, вызвана ли ошибка некорректным вводом

        :param error: Пойманное исключение
        :return: True для синтаксических ошибок, нарушенных предусловий и испорченных индексов
        """
        return isinstance(error, _USER_ERRORS)

    @staticmethod
    def exit_code_for(error: BaseException) -> int:
        """
        Код завершения CLI для исключения

        :param error: Пойманное исключение
        :return: 2 для ошибок ввода, 3 для внутренних ошибок (бюджет шагов, проверка обратимости)
        """
        if ErrorChecker.is_user_error(error):
            return EXIT_USER_ERROR
        return EXIT_INTERNAL_ERROR
