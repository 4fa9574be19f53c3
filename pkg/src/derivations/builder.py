"""
Построение выводов типа x : s ⊢ T[x] : t для конечных наследственных перестановщиков
"""
import itertools
from typing import Iterator, List, Optional, Sequence, Tuple

from src.lambda_core import (
    Abs,
    App,
    LambdaTerm,
    PermTree,
    Var,
    alpha_equal,
    apply,
    beta_normalize,
    lam,
    print_term,
    recognize_fhp,
    substitute,
)
from src.preorder import leq_witness, omega_below
from src.services.logger_service import logger
from src.type_core import OMEGA, And, Arrow, Atom, Omega, Or, TypeExpr, print_type, sem_equiv
from .checker import check_derivation
from .nodes import RuleTag, TypingDerivation, env_union, env_with, env_without, make_env

Arg = Tuple[PermTree, str, TypeExpr]

_ID = PermTree.identity()


def _node(rule, env, term, t, premises=(), var=None) -> TypingDerivation:
    return TypingDerivation(rule, env, term, t, tuple(premises), var)


def axiom(x: str, s: TypeExpr) -> TypingDerivation:
    return _node(RuleTag.AX, ((x, s),), Var(x), s)


def _and_e(d: TypingDerivation, side: str) -> TypingDerivation:
    rule = RuleTag.AND_E_L if side == "left" else RuleTag.AND_E_R
    return _node(rule, d.env, d.term, getattr(d.type, side), (d,))


def _equiv(d: TypingDerivation, t: TypeExpr) -> TypingDerivation:
    return _node(RuleTag.EQUIV, d.env, d.term, t, (d,))


def _and_i(left: TypingDerivation, right: TypingDerivation) -> TypingDerivation:
    return _node(RuleTag.AND_I, left.env, left.term, And(left.type, right.type), (left, right))


def _or_i(d: TypingDerivation, t: Or) -> TypingDerivation:
    rule = RuleTag.OR_I_L if t.left == d.type else RuleTag.OR_I_R
    return _node(rule, d.env, d.term, t, (d,))


def cut(body: TypingDerivation, var: str, arg: TypingDerivation) -> Optional[TypingDerivation]:
    """Правило (C): из Γ1, v : σ ⊢ M : τ и Γ2 ⊢ N : σ получает Γ1, Γ2 ⊢ M[N/v] : τ"""
    env = env_union(env_without(body.env, var), arg.env)
    if env is None:
        return None
    term = substitute(body.term, var, arg.term)
    return _node(RuleTag.ADM_C, env, term, body.type, (body, arg), var)


def _projections(d: TypingDerivation) -> Iterator[TypingDerivation]:
    """Проекции Γ ⊢ M : σ на конъюнкты σ"""
    if isinstance(d.type, And):
        yield from _projections(_and_e(d, "left"))
        yield from _projections(_and_e(d, "right"))
    else:
        yield d


def _union_source(x: str, s: TypeExpr) -> Optional[Tuple[TypingDerivation, And, And]]:
    """
    Перегруппировка x : s к виду (σ ∨ τ) ∧ ζ.

    Returns:
        (вывод x : s ⊢ x : (σ ∨ τ) ∧ ζ, σ ∧ ζ, τ ∧ ζ) или None, если среди конъюнктов s нет объединения
    """
    if not isinstance(s, And):
        return None
    parts = list(_projections(axiom(x, s)))
    position = next((i for i, p in enumerate(parts) if isinstance(p.type, Or)), None)
    if position is None:
        return None
    union = parts.pop(position)
    rest = parts[-1]
    for part in reversed(parts[:-1]):
        rest = _and_i(part, rest)
    source = _and_i(union, rest)
    if source.type == s:
        source = axiom(x, s)
    return source, And(union.type.left, rest.type), And(union.type.right, rest.type)


def _or_e(var: str, left, right, source: TypingDerivation) -> Optional[TypingDerivation]:
    if not (left and right):
        return None
    env = env_union(env_without(left.env, var), source.env)
    if env is None:
        return None
    term = substitute(left.term, var, source.term)
    return _node(RuleTag.OR_E, env, term, left.type, (left, right, source), var)


class DerivationBuilder:
    """
    Целенаправленный поиск вывода с возвратом.

    Имена связанных переменных генерируются заново, поэтому термы выводов
    совпадают с термами перестановщиков с точностью до α.
    """

    def __init__(self):
        self._counter = itertools.count(1)

    def fresh(self, stem: str = "y") -> str:
        return f"{stem}{next(self._counter)}"

    def applied(self, tree: PermTree, head: LambdaTerm) -> LambdaTerm:
        """T[head] = λy1…yn. head (C1 y_π(1)) … (Cn y_π(n)) со свежими именами"""
        names = [self.fresh() for _ in range(tree.arity)]
        args = [self.applied(child, Var(names[tree.perm(i)])) for i, child in enumerate(tree.children)]
        return lam(names, apply(head, *args))

    def derive(self, x: str, s: TypeExpr, t: TypeExpr, tree: PermTree) -> Optional[TypingDerivation]:
        """
        Ищет вывод x : s ⊢ T[x] : t.

        Args:
            x: Имя переменной
            s: Тип переменной
            t: Целевой тип
            tree: Перестановщик T

        Returns:
            Вывод или None
        """
        env = ((x, s),)
        if isinstance(t, Omega):
            return _node(RuleTag.ADM_OMEGA, env, self.applied(tree, Var(x)), OMEGA)
        if tree.arity == 0:
            if s == t:
                return axiom(x, s)
            if sem_equiv(s, t):
                return _equiv(axiom(x, s), t)

        if isinstance(t, And):
            left = self.derive(x, s, t.left, tree)
            right = self.derive(x, s, t.right, tree) if left else None
            if left and right:
                return _and_i(left, right)

        if isinstance(s, Or):
            left = self.derive(x, s.left, t, tree)
            right = self.derive(x, s.right, t, tree) if left else None
            if left and right:
                return _node(RuleTag.ADM_OR_I, env, left.term, t, (left, right), x)

        if isinstance(s, And):
            split = self._split_union(x, s, t, tree)
            if split:
                return split

        if tree.arity > 0:
            closed = self._peel(x, s, tree, (), t)
            if closed:
                return closed

        if isinstance(s, And):
            for side in ("left", "right"):
                projection = _and_e(axiom(x, s), side)
                body = self.derive(x, projection.type, t, tree)
                if body is None:
                    continue
                if body.rule == RuleTag.AX:
                    return projection
                return _node(RuleTag.ADM_L, env, body.term, t, (projection, body), x)

        if isinstance(t, Or):
            for part in (t.left, t.right):
                inner = self.derive(x, s, part, tree)
                if inner:
                    return _or_i(inner, t)

        if not isinstance(s, Omega) and omega_below(t):
            weakening = _node(RuleTag.ADM_OMEGA, env, Var(x), OMEGA)
            body = self.derive(x, OMEGA, t, tree)
            if body:
                return _node(RuleTag.ADM_L, env, body.term, t, (weakening, body), x)
        return None

    def _split_union(self, x, s: And, t: TypeExpr, tree: PermTree) -> Optional[TypingDerivation]:
        """Разбор объединения внутри пересечения правилом ∨E"""
        found = _union_source(x, s)
        if found is None:
            return None
        source, first, second = found
        v = self.fresh("v")
        left = self.derive(v, first, t, tree)
        right = self.derive(v, second, t, tree) if left else None
        return _or_e(v, left, right, source)

    def _partial_term(self, x: str, tree: PermTree, bound: Sequence[Tuple[str, TypeExpr]]) -> LambdaTerm:
        names = [name for name, _ in bound]
        names += [self.fresh() for _ in range(tree.arity - len(bound))]
        args = [self.applied(child, Var(names[tree.perm(i)])) for i, child in enumerate(tree.children)]
        return lam(names[len(bound):], apply(Var(x), *args))

    def _peel(self, x, s, tree: PermTree, bound, goal) -> Optional[TypingDerivation]:
        """Вводит абстракции λy_k под цель goal, затем собирает применение головы"""
        k = len(bound)
        if k == tree.arity:
            names = [name for name, _ in bound]
            types = [t for _, t in bound]
            args = [
                (child, names[tree.perm(i)], types[tree.perm(i)])
                for i, child in enumerate(tree.children)
            ]
            return self._chain(axiom(x, s), args, goal)

        env = make_env(((x, s),) + tuple(bound))
        if isinstance(goal, Omega):
            return _node(RuleTag.ADM_OMEGA, env, self._partial_term(x, tree, bound), OMEGA)
        if isinstance(goal, Arrow):
            y = self.fresh()
            body = self._peel(x, s, tree, tuple(bound) + ((y, goal.left),), goal.right)
            if body:
                return _node(RuleTag.ARROW_I, env, Abs(y, body.term), goal, (body,))
            return None
        if isinstance(goal, Atom):
            body = self._peel(x, s, tree, bound, Arrow(OMEGA, goal))
            return _equiv(body, goal) if body else None
        if isinstance(goal, And):
            left = self._peel(x, s, tree, bound, goal.left)
            right = self._peel(x, s, tree, bound, goal.right) if left else None
            return _and_i(left, right) if left and right else None
        for part in (goal.left, goal.right):
            inner = self._peel(x, s, tree, bound, part)
            if inner:
                return _or_i(inner, goal)
        return None

    def _components(self, d: TypingDerivation) -> Iterator[TypingDerivation]:
        if isinstance(d.type, And):
            yield from self._components(_and_e(d, "left"))
            yield from self._components(_and_e(d, "right"))
        else:
            yield d

    def _apply_components(self, head: TypingDerivation, arg: Arg) -> List[TypingDerivation]:
        child, y, u = arg
        results = []
        for component in self._components(head):
            if isinstance(component.type, Arrow):
                via = component
            elif isinstance(component.type, (Atom, Omega)):
                via = _equiv(component, Arrow(OMEGA, component.type))
            else:
                continue
            argument = self.derive(y, u, via.type.left, child)
            if argument is None:
                continue
            env = env_union(via.env, argument.env)
            if env is None:
                continue
            results.append(
                _node(RuleTag.ARROW_E, env, App(via.term, argument.term), via.type.right, (via, argument))
            )
        return results

    def _chain(self, head: TypingDerivation, args: List[Arg], goal: TypeExpr) -> Optional[TypingDerivation]:
        """Вывод для head a1 … an : goal, где ai = Ci[yi]"""
        if isinstance(goal, Omega):
            env = env_union(head.env, make_env((y, u) for _, y, u in args))
            term = apply(head.term, *[self.applied(child, Var(y)) for child, y, _ in args])
            return _node(RuleTag.ADM_OMEGA, env, term, OMEGA)
        if isinstance(goal, And):
            left = self._chain(head, args, goal.left)
            right = self._chain(head, args, goal.right) if left else None
            return _and_i(left, right) if left and right else None

        h = head.type
        if isinstance(h, Or):
            v = self.fresh("v")
            left = self._chain(axiom(v, h.left), args, goal)
            right = self._chain(axiom(v, h.right), args, goal) if left else None
            if left and right:
                split = _node(RuleTag.ADM_OR_I, env_with(left.env, v, h), left.term, goal, (left, right), v)
                return cut(split, v, head)
            return None

        if args and isinstance(h, And):
            v = self.fresh("v")
            found = _union_source(v, h)
            if found:
                source, first, second = found
                left = self._chain(axiom(v, first), args, goal)
                right = self._chain(axiom(v, second), args, goal) if left else None
                split = _or_e(v, left, right, source)
                if split:
                    return cut(split, v, head)

        if not args:
            if h == goal:
                return head
            if sem_equiv(h, goal):
                return _equiv(head, goal)
            v = self.fresh("v")
            conversion = self.derive(v, h, goal, _ID)
            if conversion:
                return cut(conversion, v, head)
            return None

        (child, y, u), rest = args[0], args[1:]
        if isinstance(u, Or):
            left = self._chain(head, [(child, y, u.left)] + rest, goal)
            right = self._chain(head, [(child, y, u.right)] + rest, goal) if left else None
            if left and right:
                return _node(RuleTag.ADM_OR_I, env_with(left.env, y, u), left.term, goal, (left, right), y)
            return None

        found = _union_source(y, u)
        if found:
            source, first, second = found
            left = self._chain(head, [(child, y, first)] + rest, goal)
            right = self._chain(head, [(child, y, second)] + rest, goal) if left else None
            split = _or_e(y, left, right, source)
            if split:
                return split

        applied = self._apply_components(head, (child, y, u))
        if applied:
            combined = applied[0]
            for more in applied[1:]:
                combined = _and_i(combined, more)
            result = self._chain(combined, rest, goal)
            if result:
                return result
        if isinstance(goal, Or):
            for part in (goal.left, goal.right):
                inner = self._chain(head, args, part)
                if inner:
                    return _or_i(inner, goal)
        return None


def derive_coercion(s: TypeExpr, t: TypeExpr, tree: PermTree, var: str = "x") -> Optional[TypingDerivation]:
    """
    Вывод var : s ⊢ T[var] : t.

    Args:
        s: Тип переменной
        t: Целевой тип
        tree: Перестановщик
        var: Имя переменной

    Returns:
        Вывод или None, если поиск не удался
    """
    return DerivationBuilder().derive(var, s, t, tree)


def emit_fhp_derivation(term: LambdaTerm, s: TypeExpr, t: TypeExpr) -> Optional[TypingDerivation]:
    """
    Вывод ⊢ P : s → t для перестановщика P.

    Корень строится правилом →I над выводом x : s ⊢ T[x] : t, затем дерево проверяется
    целиком; непроверенный вывод не возвращается.

    Args:
        term: Перестановщик (с точностью до β)
        s: Исходный тип
        t: Целевой тип

    Returns:
        Проверенный вывод или None
    """
    tree = recognize_fhp(term)
    if tree is None:
        logger.debug(f"Вывод не построен: терм не является FHP ({print_term(term)})")
        return None
    builder = DerivationBuilder()
    x = builder.fresh("x")
    body = builder.derive(x, s, t, tree)
    if body is None:
        logger.debug(f"Вывод не построен: поиск исчерпан для {print_type(s)} → {print_type(t)}")
        return None
    root = _node(RuleTag.ARROW_I, (), Abs(x, body.term), Arrow(s, t), (body,))
    if not alpha_equal(root.term, beta_normalize(term)):
        logger.debug("Вывод не построен: субъект не совпадает с β-нормальной формой терма")
        return None
    result = check_derivation(root)
    if not result:
        logger.warning(f"Построенный вывод не прошёл проверку: {result.diagnostic}")
        return None
    return root


def emit_leq_derivation(s: TypeExpr, t: TypeExpr) -> Optional[TypingDerivation]:
    """Вывод ⊢ F : s → t для FHI-свидетеля s ≤ t (None, если s ≰ t)"""
    term = leq_witness(s, t)
    if term is None:
        return None
    return emit_fhp_derivation(term, s, t)


def emit_witness_derivations(witness) -> Optional[Tuple[TypingDerivation, TypingDerivation]]:
    """
    Выводы для обеих сторон изоморфизма.

    Args:
        witness: IsoWitness

    Returns:
        (⊢ fwd : s → t, ⊢ bwd : t → s) или None
    """
    fwd = emit_fhp_derivation(witness.fwd, witness.source, witness.target)
    if fwd is None:
        return None
    bwd = emit_fhp_derivation(witness.bwd, witness.target, witness.source)
    if bwd is None:
        return None
    return fwd, bwd


def cut_as_redex(node: TypingDerivation) -> Optional[TypingDerivation]:
    """
    Переписывает узел (C) в явный β-редекс (λv.M) N, типизированный через →I и →E.

    Returns:
        Вывод для (λv.M) N либо None, если узел не (C) или N не замкнут по окружению
    """
    if node.rule != RuleTag.ADM_C:
        return None
    body, arg = node.premises
    v = node.var
    gamma = env_without(body.env, v)
    v_type = dict(body.env)[v]
    abstraction = _node(RuleTag.ARROW_I, gamma, Abs(v, body.term), Arrow(v_type, body.type), (body,))
    env = env_union(gamma, arg.env)
    if env is None:
        return None
    return _node(RuleTag.ARROW_E, env, App(abstraction.term, arg.term), body.type, (abstraction, arg))
