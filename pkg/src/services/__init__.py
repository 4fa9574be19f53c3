"""
Пакет служебных сервисов (логирование, классификация ошибок)
"""
from .logger_service import logger, Logger
from .error_checker import (
    EXIT_INTERNAL_ERROR,
    EXIT_NEGATIVE,
    EXIT_OK,
    EXIT_USER_ERROR,
    ErrorChecker,
)

__all__ = [
    'logger', 'Logger', 'ErrorChecker',
    'EXIT_OK', 'EXIT_NEGATIVE', 'EXIT_USER_ERROR', 'EXIT_INTERNAL_ERROR',
]
