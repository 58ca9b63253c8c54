"""Jacobi matrices of invariant measures of homogeneous affine IFS.

The heavy lifting lives in the compiled extension ``ifsjacobi._core``;
this package re-exports its public names.
"""

from ._core import (
    CapacityReport,
    DiscreteMeasure,
    Error,
    FeasibilityFrontier,
    FixpointReport,
    FixpointResult,
    FrontierPoint,
    GaussRule,
    InverseResult,
    JacobiMatrix,
    NevaiReport,
    PowerlawFit,
    capacity_report,
    closure,
    convolve,
    convolve_spectral,
    delta_frontier,
    fibonacci_jacobi,
    fixpoint,
    frobenius_distance,
    gauss_rule,
    invert,
    jacobi_from_discrete,
    jacobi_lebesgue,
    nevai_report,
    powerlaw_fit,
    read_atoms_file,
    read_jacobi_file,
    write_atoms_file,
    write_jacobi_file,
)

__all__ = [
    "CapacityReport",
    "DiscreteMeasure",
    "Error",
    "FeasibilityFrontier",
    "FixpointReport",
    "FixpointResult",
    "FrontierPoint",
    "GaussRule",
    "InverseResult",
    "JacobiMatrix",
    "NevaiReport",
    "PowerlawFit",
    "capacity_report",
    "closure",
    "convolve",
    "convolve_spectral",
    "delta_frontier",
    "fibonacci_jacobi",
    "fixpoint",
    "frobenius_distance",
    "gauss_rule",
    "invert",
    "jacobi_from_discrete",
    "jacobi_lebesgue",
    "nevai_report",
    "powerlaw_fit",
    "read_atoms_file",
    "read_jacobi_file",
    "write_atoms_file",
    "write_jacobi_file",
]

__version__ = "0.1.0"
