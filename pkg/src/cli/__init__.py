"""Командная строка: команды как pydantic-модели и их реестр."""
from .app import build_parser, run
from .registry import CommandsRegistry, get_registry

__all__ = ["build_parser", "run", "CommandsRegistry", "get_registry"]
