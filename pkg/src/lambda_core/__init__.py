"""Линейные λ-термы и конечные наследственные перестановщики."""
from .terms import (
    IDENTITY,
    Abs,
    App,
    LambdaTerm,
    Var,
    alpha_equal,
    alpha_key,
    apply,
    free_vars,
    fresh_name,
    is_linear,
    lam,
    substitute,
    term_size,
)
from .parser import parse_term, print_term
from .reduction import beta_normalize, betaeta_equal, betaeta_normalize, eta_normalize
from .permutators import (
    Permutation,
    PermTree,
    fhi_tree,
    fhp_compose,
    fhp_invert,
    is_fhi_term,
    merge_fhi,
    recognize_fhp,
    to_term,
    verify_inverse_pair,
)

__all__ = [
    "IDENTITY", "Abs", "App", "LambdaTerm", "Var", "alpha_equal", "alpha_key", "apply",
    "free_vars", "fresh_name", "is_linear", "lam", "substitute", "term_size",
    "parse_term", "print_term", "beta_normalize", "betaeta_equal", "betaeta_normalize",
    "eta_normalize", "Permutation", "PermTree", "fhi_tree", "fhp_compose", "fhp_invert",
    "is_fhi_term", "merge_fhi", "recognize_fhp", "to_term", "verify_inverse_pair",
]
