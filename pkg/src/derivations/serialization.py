"""
Текстовый формат деревьев вывода: одна строка на узел, отступ в два пробела на уровень
"""
import re
from typing import List, Optional, Tuple

from src.common.errors import MalformedDerivationError, TermSyntaxError, TypeSyntaxError
from src.lambda_core import parse_term, print_term
from src.type_core import parse_type, print_type
from .nodes import RuleTag, TypingDerivation, make_env

_INDENT = "  "
_RULE_PATTERN = re.compile(r"^(?P<rule>[A-Za-z_']+)(\[(?P<var>[A-Za-z_][A-Za-z0-9_]*)\])?$")


def _format_node(d: TypingDerivation) -> str:
    rule = d.rule.value if d.var is None else f"{d.rule.value}[{d.var}]"
    env = ", ".join(f"{name} : {print_type(t)}" for name, t in d.env)
    return f"{rule} | [{env}] | {print_term(d.term)} | {print_type(d.type)}"


def dump_derivation(d: TypingDerivation) -> str:
    """
    Печатает вывод в прямом порядке

    Args:
        d: Корень вывода

    Returns:
        Многострочный текст; строка узла: `rule | [x : σ, ...] | M | τ`
    """
    lines: List[str] = []
    for path, node in d.walk():
        lines.append(_INDENT * len(path) + _format_node(node))
    return "\n".join(lines)


def _parse_line(line: str, number: int) -> Tuple[int, RuleTag, Optional[str], tuple, object, object]:
    stripped = line.lstrip(" ")
    indent = len(line) - len(stripped)
    if indent % len(_INDENT):
        raise MalformedDerivationError(f"строка {number}: нечётный отступ")
    head, sep, rest = stripped.partition(" | ")
    match = _RULE_PATTERN.match(head)
    if not sep or not match:
        raise MalformedDerivationError(f"строка {number}: не удалось разобрать правило")
    try:
        rule = RuleTag(match.group("rule"))
    except ValueError:
        raise MalformedDerivationError(f"строка {number}: неизвестное правило {match.group('rule')}")

    env_text, sep, rest = rest.partition("] | ")
    if not sep or not env_text.startswith("["):
        raise MalformedDerivationError(f"строка {number}: не удалось разобрать окружение")
    term_text, sep, type_text = rest.partition(" | ")
    if not sep:
        raise MalformedDerivationError(f"строка {number}: нет типа")

    try:
        bindings = []
        for item in filter(None, (part.strip() for part in env_text[1:].split(","))):
            name, colon, t = item.partition(" : ")
            if not colon:
                raise MalformedDerivationError(f"строка {number}: связывание без типа: {item}")
            bindings.append((name.strip(), parse_type(t)))
        term = parse_term(term_text, warn_free=False)
        t = parse_type(type_text)
    except (TypeSyntaxError, TermSyntaxError) as e:
        raise MalformedDerivationError(f"строка {number}: {e}")
    return indent // len(_INDENT), rule, match.group("var"), make_env(bindings), term, t


def load_derivation(text: str) -> TypingDerivation:
    """
    Разбирает вывод, напечатанный dump_derivation

    Raises:
        MalformedDerivationError: Если текст не соответствует формату
    """
    rows = [
        _parse_line(line, number)
        for number, line in enumerate(text.splitlines(), start=1)
        if line.strip()
    ]
    if not rows:
        raise MalformedDerivationError("пустой вывод")

    def build(start: int, depth: int) -> Tuple[TypingDerivation, int]:
        level, rule, var, env, term, t = rows[start]
        if level != depth:
            raise MalformedDerivationError(f"узел {start + 1}: неверная глубина отступа")
        premises = []
        position = start + 1
        while position < len(rows) and rows[position][0] > depth:
            premise, position = build(position, depth + 1)
            premises.append(premise)
        return TypingDerivation(rule, env, term, t, tuple(premises), var), position

    root, consumed = build(0, 0)
    if consumed != len(rows):
        raise MalformedDerivationError("после корня вывода есть лишние строки")
    return root
