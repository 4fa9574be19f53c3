r"""
Разбор и печать λ-термов: `\x y. body` (или `λx y. body`), применение записывается юкстапозицией
"""
import re
from typing import List, Tuple

from src.common.errors import TermSyntaxError
from src.services.logger_service import logger
from .terms import Abs, App, LambdaTerm, Var, free_vars

_IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")

Token = Tuple[str, str, int]


def _tokenize(text: str) -> List[Token]:
    tokens: List[Token] = []
    pos = 0
    while pos < len(text):
        char = text[pos]
        if char.isspace():
            pos += 1
        elif char in "\\λ":
            tokens.append(("LAMBDA", char, pos))
            pos += 1
        elif char in ".()":
            tokens.append((char, char, pos))
            pos += 1
        else:
            match = _IDENT_RE.match(text, pos)
            if not match:
                raise TermSyntaxError(f"Неожиданный символ {char!r}", pos)
            tokens.append(("IDENT", match.group(0), pos))
            pos = match.end()
    tokens.append(("EOF", "", len(text)))
    return tokens


class _TermParser:
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
            raise TermSyntaxError(f"Ожидалось {kind!r}, найдено {found!r}", token[2])
        return self.advance()

    def parse(self) -> LambdaTerm:
        term = self.parse_term()
        self.expect("EOF")
        return term

    def parse_term(self) -> LambdaTerm:
        if self.peek()[0] == "LAMBDA":
            return self.parse_lambda()
        return self.parse_application()

    def parse_lambda(self) -> LambdaTerm:
        self.expect("LAMBDA")
        binders = [self.expect("IDENT")[1]]
        while self.peek()[0] == "IDENT":
            binders.append(self.advance()[1])
        self.expect(".")
        body = self.parse_term()
        for binder in reversed(binders):
            body = Abs(binder, body)
        return body

    def parse_application(self) -> LambdaTerm:
        term = self.parse_atom()
        while self.peek()[0] in ("IDENT", "(", "LAMBDA"):
            if self.peek()[0] == "LAMBDA":
                return App(term, self.parse_lambda())
            term = App(term, self.parse_atom())
        return term

    def parse_atom(self) -> LambdaTerm:
        kind, value, pos = self.peek()
        if kind == "IDENT":
            self.advance()
            return Var(value)
        if kind == "(":
            self.advance()
            inner = self.parse_term()
            self.expect(")")
            return inner
        found = value or "конец ввода"
        raise TermSyntaxError(f"Ожидался терм, найдено {found!r}", pos)


def parse_term(text: str, warn_free: bool = True) -> LambdaTerm:
    """
    Разбирает текст λ-терма.

    Args:
        text: Текст терма
        warn_free: Сообщать в лог о свободных переменных открытого терма

    Returns:
        Терм

    Raises:
        TermSyntaxError: Текст не соответствует грамматике
    """
    term = _TermParser(text).parse()
    if warn_free:
        unbound = free_vars(term)
        if unbound:
            logger.warning("Терм содержит свободные переменные", ", ".join(sorted(unbound)))
    return term


def print_term(t: LambdaTerm) -> str:
    """
    Печатает терм; цепочки абстракций сворачиваются в `\\x y. body`.

    Args:
        t: Терм

    Returns:
        Текст, повторно разбираемый в α-равный терм
    """
    if isinstance(t, Var):
        return t.name
    if isinstance(t, Abs):
        binders = []
        body = t
        while isinstance(body, Abs):
            binders.append(body.binder)
            body = body.body
        return "\\" + " ".join(binders) + ". " + print_term(body)
    fn_text = print_term(t.fn)
    if isinstance(t.fn, Abs):
        fn_text = f"({fn_text})"
    arg_text = print_term(t.arg)
    if isinstance(t.arg, (Abs, App)):
        arg_text = f"({arg_text})"
    return f"{fn_text} {arg_text}"
