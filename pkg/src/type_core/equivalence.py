"""
Семантическая эквивалентность ≃: минимальная конгруэнция с φ ≃ ω→φ, ω ≃ ω→ω,
σ∧ω ≃ ω∧σ ≃ σ и σ∨ω ≃ ω∨σ ≃ ω
"""
from .syntax import And, Arrow, Atom, Omega, Or, TypeExpr


def _contract(t: TypeExpr) -> TypeExpr:
    if isinstance(t, Arrow) and isinstance(t.left, Omega):
        if isinstance(t.right, (Atom, Omega)):
            return t.right
    elif isinstance(t, And):
        if isinstance(t.right, Omega):
            return t.left
        if isinstance(t.left, Omega):
            return t.right
    elif isinstance(t, Or):
        if isinstance(t.left, Omega) or isinstance(t.right, Omega):
            return Omega()
    return t


def sem_canon(t: TypeExpr) -> TypeExpr:
    """
    Нормальная форма типа относительно ориентированных слева направо равенств ≃.

    Правила уменьшают размер, поэтому достаточно одного прохода снизу вверх:
    результат свёртки в корне всегда уже нормален.

    Args:
        t: Бинарный тип

    Returns:
        Нормальная форма по ≃
    """
    if isinstance(t, (Atom, Omega)):
        return t
    if isinstance(t, (Arrow, And, Or)):
        return _contract(type(t)(sem_canon(t.left), sem_canon(t.right)))
    raise TypeError(f"sem_canon ожидает бинарный тип, получено: {t!r}")


def sem_equiv(s: TypeExpr, t: TypeExpr) -> bool:
    """
    Проверяет s ≃ t. Сравнение синтаксическое, без учёта AC.

    Args:
        s: Первый тип
        t: Второй тип

    Returns:
        True, если нормальные формы по ≃ совпадают
    """
    return sem_canon(s) == sem_canon(t)
