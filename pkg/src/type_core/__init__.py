"""Синтаксис типов, каноническая форма и семантическая эквивалентность."""
from .syntax import (
    OMEGA,
    And,
    Arrow,
    Atom,
    CanonicalType,
    NAnd,
    NOr,
    Omega,
    Or,
    TypeExpr,
    atoms,
    is_inter,
    is_union,
    print_full,
    print_type,
    size,
)
from .parser import parse_type
from .canonical import ac_equal, build_nary, canonicalize, children_of, to_expr
from .equivalence import sem_canon, sem_equiv
from .enumeration import enumerate_types
from .context import Step, TypeContext, positions, replace_at, subterm_at

__all__ = [
    "OMEGA", "And", "Arrow", "Atom", "CanonicalType", "NAnd", "NOr", "Omega", "Or",
    "TypeExpr", "atoms", "is_inter", "is_union", "print_full", "print_type", "size",
    "parse_type", "ac_equal", "build_nary", "canonicalize", "children_of", "to_expr",
    "sem_canon", "sem_equiv", "Step", "TypeContext", "positions", "replace_at",
    "subterm_at", "enumerate_types",
]
