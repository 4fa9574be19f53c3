"""
Бестиповые λ-термы: α-равенство, свободные переменные, подстановка без захвата
"""
import itertools
from collections import Counter
from dataclasses import dataclass
from typing import FrozenSet, Iterable, Optional, Union


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Abs:
    binder: str
    body: "LambdaTerm"


@dataclass(frozen=True)
class App:
    fn: "LambdaTerm"
    arg: "LambdaTerm"


LambdaTerm = Union[Var, Abs, App]


def lam(binders: Iterable[str], body: LambdaTerm) -> LambdaTerm:
    """Строит цепочку абстракций λb1 … bn. body"""
    for binder in reversed(list(binders)):
        body = Abs(binder, body)
    return body


def apply(fn: LambdaTerm, *args: LambdaTerm) -> LambdaTerm:
    """Левоассоциативное применение fn a1 … an"""
    for arg in args:
        fn = App(fn, arg)
    return fn


IDENTITY = Abs("x", Var("x"))


def free_vars(t: LambdaTerm) -> FrozenSet[str]:
    """Множество свободных переменных терма"""
    if isinstance(t, Var):
        return frozenset((t.name,))
    if isinstance(t, Abs):
        return free_vars(t.body) - {t.binder}
    return free_vars(t.fn) | free_vars(t.arg)


def all_names(t: LambdaTerm) -> FrozenSet[str]:
    """Все имена, встречающиеся в терме (свободные, связанные и связывающие)"""
    if isinstance(t, Var):
        return frozenset((t.name,))
    if isinstance(t, Abs):
        return all_names(t.body) | {t.binder}
    return all_names(t.fn) | all_names(t.arg)


def term_size(t: LambdaTerm) -> int:
    """Число узлов терма"""
    if isinstance(t, Var):
        return 1
    if isinstance(t, Abs):
        return 1 + term_size(t.body)
    return 1 + term_size(t.fn) + term_size(t.arg)


def _free_counts(t: LambdaTerm) -> Optional[Counter]:
    if isinstance(t, Var):
        return Counter({t.name: 1})
    if isinstance(t, Abs):
        counts = _free_counts(t.body)
        if counts is None or counts[t.binder] != 1:
            return None
        del counts[t.binder]
        return counts
    fn_counts = _free_counts(t.fn)
    arg_counts = _free_counts(t.arg)
    if fn_counts is None or arg_counts is None:
        return None
    return fn_counts + arg_counts


def is_linear(t: LambdaTerm) -> bool:
    """
    Проверяет линейность: каждая свободная и каждая связанная переменная
    встречается ровно один раз.
    """
    counts = _free_counts(t)
    return counts is not None and all(count == 1 for count in counts.values())


def fresh_name(base: str, avoid: FrozenSet[str]) -> str:
    """Первое имя вида base, base1, base2, … не входящее в avoid"""
    stem = base.rstrip("0123456789") or "v"
    if base not in avoid:
        return base
    for i in itertools.count(1):
        candidate = f"{stem}{i}"
        if candidate not in avoid:
            return candidate
    raise AssertionError("unreachable")


def substitute(t: LambdaTerm, name: str, value: LambdaTerm) -> LambdaTerm:
    """
    Подстановка t[name := value] без захвата переменных.

    Args:
        t: Терм
        name: Заменяемая свободная переменная
        value: Подставляемый терм

    Returns:
        Результат подстановки; связанные переменные переименовываются при конфликте
    """
    if isinstance(t, Var):
        return value if t.name == name else t
    if isinstance(t, App):
        return App(substitute(t.fn, name, value), substitute(t.arg, name, value))
    if t.binder == name:
        return t
    if name not in free_vars(t.body):
        return t
    value_fv = free_vars(value)
    if t.binder in value_fv:
        new_binder = fresh_name(t.binder, value_fv | all_names(t.body) | {name})
        body = substitute(t.body, t.binder, Var(new_binder))
        return Abs(new_binder, substitute(body, name, value))
    return Abs(t.binder, substitute(t.body, name, value))


def _nameless(t: LambdaTerm, scope: tuple):
    if isinstance(t, Var):
        for depth, binder in enumerate(scope):
            if binder == t.name:
                return ("b", depth)
        return ("f", t.name)
    if isinstance(t, Abs):
        return ("l", _nameless(t.body, (t.binder,) + scope))
    return ("a", _nameless(t.fn, scope), _nameless(t.arg, scope))


def alpha_equal(s: LambdaTerm, t: LambdaTerm) -> bool:
    """Равенство термов с точностью до переименования связанных переменных"""
    return _nameless(s, ()) == _nameless(t, ())


def alpha_key(t: LambdaTerm):
    """Хешируемый ключ класса α-эквивалентности"""
    return _nameless(t, ())


def head_and_args(t: LambdaTerm):
    """Разбивает применение на голову и список аргументов"""
    args = []
    while isinstance(t, App):
        args.append(t.arg)
        t = t.fn
    return t, list(reversed(args))


def strip_lambdas(t: LambdaTerm, limit: Optional[int] = None):
    """Снимает ведущие абстракции; возвращает (список связывающих, тело)"""
    binders = []
    while isinstance(t, Abs) and (limit is None or len(binders) < limit):
        binders.append(t.binder)
        t = t.body
    return binders, t
