"""
Разбор конкретного синтаксиса типов
"""
import re
from typing import List, Tuple

from src.common.errors import TypeAmbiguityError, TypeSyntaxError
from .syntax import OMEGA, And, Arrow, Atom, Or, RESERVED_OMEGA, TypeExpr

_TOKEN_RE = re.compile(r"\s*(?:(->)|([&|()])|([A-Za-z_][A-Za-z0-9_]*))")

Token = Tuple[str, str, int]


def _tokenize(text: str) -> List[Token]:
    tokens: List[Token] = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        match = _TOKEN_RE.match(text, pos)
        if not match:
            raise TypeSyntaxError(f"Неожиданный символ {text[pos]!r}", pos)
        start = match.start(match.lastindex)
        if match.group(1):
            tokens.append(("ARROW", "->", start))
        elif match.group(2):
            tokens.append((match.group(2), match.group(2), start))
        else:
            tokens.append(("IDENT", match.group(3), start))
        pos = match.end()
    tokens.append(("EOF", "", len(text)))
    return tokens


class _TypeParser:
    """Рекурсивный спуск по грамматике типов"""

    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.index = 0

    def peek(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def expect(self, kind: str) -> Token:
        token = self.peek()
        if token[0] != kind:
            found = token[1] or "конец ввода"
            raise TypeSyntaxError(f"Ожидалось {kind!r}, найдено {found!r}", token[2])
        return self.advance()

    def parse(self) -> TypeExpr:
        result = self.parse_type()
        self.expect("EOF")
        return result

    def parse_type(self) -> TypeExpr:
        left = self.parse_connective()
        if self.peek()[0] == "ARROW":
            self.advance()
            return Arrow(left, self.parse_type())
        return left

    def parse_connective(self) -> TypeExpr:
        result = self.parse_operand()
        connective = None
        while self.peek()[0] in ("&", "|"):
            kind, _, pos = self.advance()
            if connective is not None and kind != connective:
                raise TypeAmbiguityError(
                    "Смешение '&' и '|' без скобок", pos
                )
            connective = kind
            right = self.parse_operand()
            result = And(result, right) if kind == "&" else Or(result, right)
        return result

    def parse_operand(self) -> TypeExpr:
        kind, value, pos = self.peek()
        if kind == "(":
            self.advance()
            inner = self.parse_type()
            self.expect(")")
            return inner
        if kind == "IDENT":
            self.advance()
            if value == RESERVED_OMEGA:
                return OMEGA
            return Atom(value)
        found = value or "конец ввода"
        raise TypeSyntaxError(f"Ожидался тип, найдено {found!r}", pos)


def parse_type(text: str) -> TypeExpr:
    """
    Разбирает текст типа.

    `&` и `|` связывают сильнее `->`, стрелка правоассоциативна,
    смешение `&` и `|` на одном уровне требует скобок.

    Args:
        text: Текст типа

    Returns:
        Бинарное дерево типа

    Raises:
        TypeSyntaxError: Текст не соответствует грамматике
        TypeAmbiguityError: `&` и `|` смешаны без скобок
    """
    return _TypeParser(text).parse()
