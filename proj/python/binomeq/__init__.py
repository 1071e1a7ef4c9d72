"""Exact search and verification for binom(n,k) = binom(m,l) + d."""

from ._binomeq import (
    DomainError,
    binom,
    binom_inverse,
    bounded_search,
    collision_search,
    congruence_solvable,
    curve_models,
    run_criterion,
    scan_unsolvable,
    solve_equal_index,
    solve_k22,
    verify_corpus,
    verify_solution,
)

__all__ = [
    "DomainError",
    "binom",
    "binom_inverse",
    "bounded_search",
    "collision_search",
    "congruence_solvable",
    "curve_models",
    "run_criterion",
    "scan_unsolvable",
    "solve_equal_index",
    "solve_k22",
    "verify_corpus",
    "verify_solution",
]
