"""Синтез свидетелей изоморфизма."""
from .witness import IsoWitness, Provenance, derivation_to_fhp_pair, is_strong_pair
from .lemma3 import STOCK_ISOMORPHISMS, lemma3_witness, resolve_name
from .pipeline import compose_witnesses, synthesize_iso

__all__ = [
    "IsoWitness", "Provenance", "derivation_to_fhp_pair", "is_strong_pair",
    "STOCK_ISOMORPHISMS", "lemma3_witness", "resolve_name", "compose_witnesses",
    "synthesize_iso",
]
