"""Exact Gaussian-integer solutions of w^5 + x^5 = y^5 + z^5."""

from .gaussint import GaussInt, canonical_associate, conj, norm
from .identities import PythTriple, enumerate_primitive_triples, lemma_lhs, lemma_rhs, th2_solution
from .pell import PellState, half_companion, pell, th1_family, th1_gap
from .quadruple import Quadruple, verify_solution
from .search import SearchConfig, SolutionClass, canonicalize_solution, run_search

__all__ = [
    "GaussInt",
    "PellState",
    "PythTriple",
    "Quadruple",
    "SearchConfig",
    "SolutionClass",
    "canonical_associate",
    "canonicalize_solution",
    "conj",
    "enumerate_primitive_triples",
    "half_companion",
    "lemma_lhs",
    "lemma_rhs",
    "norm",
    "pell",
    "run_search",
    "th1_family",
    "th1_gap",
    "th2_solution",
    "verify_solution",
]
