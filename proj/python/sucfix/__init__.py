"""Permutation statistics, a succession/fixed-point bijection, and exhaustive verifiers."""

from ._core import (
    MAX_ENUMERATION_SIZE,
    MAX_TABLE_SIZE,
    PermutationStream,
    StructuralError,
    canonical_cycle_form,
    distribution_table,
    drop_bar,
    enumerate_permutations,
    exc_bar,
    fix_bar,
    flatten,
    naj_suc,
    phi,
    phi_inverse,
    phi_trace,
    pred,
    stats,
    suc,
    unflatten,
    verify,
)

__all__ = [
    "MAX_ENUMERATION_SIZE",
    "MAX_TABLE_SIZE",
    "PermutationStream",
    "StructuralError",
    "canonical_cycle_form",
    "distribution_table",
    "drop_bar",
    "enumerate_permutations",
    "exc_bar",
    "fix_bar",
    "flatten",
    "naj_suc",
    "phi",
    "phi_inverse",
    "phi_trace",
    "pred",
    "stats",
    "suc",
    "unflatten",
    "verify",
]
