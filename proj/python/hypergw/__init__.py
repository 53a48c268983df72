"""Exact hypergeometric series and Gromov-Witten invariants of Calabi-Yau hypersurfaces.

Every number is an exact ``fractions.Fraction``; series are lists indexed by
the power of q.
"""
from ._hypergw import (
    HypergwError,
    extract_invariants,
    i_diagonal,
    i_series,
    instanton_numbers,
    invariants,
    invariants_json,
    kernel_F,
    mirror_map,
    mu,
    q_hbar,
    suite_names,
    table_round_trip,
    theorem2_series,
    verify,
)

__all__ = [
    "HypergwError",
    "extract_invariants",
    "i_diagonal",
    "i_series",
    "instanton_numbers",
    "invariants",
    "invariants_json",
    "kernel_F",
    "mirror_map",
    "mu",
    "q_hbar",
    "suite_names",
    "table_round_trip",
    "theorem2_series",
    "verify",
]
