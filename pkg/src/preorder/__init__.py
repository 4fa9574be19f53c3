"""Предпорядок нормализации ≤ и его FHI-свидетели."""
from .decider import LeqQuery, leq, leq_canonical, omega_below
from .oracle import leq_closure_oracle
from .witness import leq_witness, leq_witness_tree, omega_witness

__all__ = [
    "LeqQuery",
    "leq",
    "leq_canonical",
    "omega_below",
    "leq_closure_oracle",
    "leq_witness",
    "leq_witness_tree",
    "omega_witness",
]
