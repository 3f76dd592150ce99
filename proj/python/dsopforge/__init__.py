"""DSOP and partial DSOP synthesis with the cube-weight heuristic.

Covers are lists of strings over '0', '1' and '-'; position i of a string is
variable x_{i+1}.
"""

from ._core import (
    BackendError,
    CapacityError,
    ContractViolation,
    DimensionMismatch,
    InputError,
    PlaParseError,
    ProgressError,
    VerificationFailed,
    build_sop,
    chain_family,
    disjoint_sharp,
    dsop,
    exact_min_dsop,
    partial_dsop,
    run_partial_pla,
    run_pla,
    verify_dsop,
    verify_partial_dsop,
    weights,
)

__all__ = [
    "BackendError",
    "CapacityError",
    "ContractViolation",
    "DimensionMismatch",
    "InputError",
    "PlaParseError",
    "ProgressError",
    "VerificationFailed",
    "build_sop",
    "chain_family",
    "disjoint_sharp",
    "dsop",
    "exact_min_dsop",
    "partial_dsop",
    "run_partial_pla",
    "run_pla",
    "verify_dsop",
    "verify_partial_dsop",
    "weights",
]
