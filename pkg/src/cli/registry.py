"""
Реестр команд CLI.

Команда: pydantic-модель с атрибутом класса `command_name` и методом `process()`,
возвращающим CommandResult.
"""

from typing import Dict, List, Optional, Type

from pydantic import BaseModel


class CommandsRegistry:
    """Реестр команд."""

    def __init__(self):
        """Инициализация реестра."""
        self._commands: Dict[str, Type[BaseModel]] = {}
        self._load_commands()

    def _load_commands(self) -> None:
        """Регистрирует все команды из пакета commands."""
        from .commands import (
            EquivCommand,
            IndexBuildCommand,
            IndexQueryCommand,
            IsoCommand,
            LeqCommand,
            Lemma3Command,
            NormalFormCommand,
            ParseCommand,
            SimilarCommand,
            TypecheckCommand,
            VerifyCommand,
        )

        commands_list = [
            ParseCommand,
            NormalFormCommand,
            LeqCommand,
            EquivCommand,
            SimilarCommand,
            IsoCommand,
            VerifyCommand,
            TypecheckCommand,
            Lemma3Command,
            IndexBuildCommand,
            IndexQueryCommand,
        ]

        for command_class in commands_list:
            if (issubclass(command_class, BaseModel) and
                    callable(getattr(command_class, 'process', None))):
                self._commands[command_class.command_name] = command_class

    def get_command(self, name: str) -> Optional[Type[BaseModel]]:
        """
        Получить команду по имени.

        Args:
            name: Имя команды в командной строке

        Returns:
            Класс команды или None
        """
        return self._commands.get(name)

    def get_all_commands(self) -> List[Type[BaseModel]]:
        return list(self._commands.values())

    def get_command_names(self) -> List[str]:
        return list(self._commands.keys())


# Глобальный экземпляр реестра
_registry: Optional[CommandsRegistry] = None


def get_registry() -> CommandsRegistry:
    """
    Получить глобальный экземпляр реестра.

    Returns:
        Экземпляр реестра команд
    """
    global _registry
    if _registry is None:
        _registry = CommandsRegistry()
    return _registry
