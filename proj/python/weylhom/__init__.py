"""Homomorphism spaces between Weyl modules of q-Schur algebras.

Thin Python facade over the compiled extension: scalars print as exact
integer-coefficient polynomials in q (or residues over a prime field), and
structured values are JSON text in the same schemas the command-line tool
prints.
"""

from _weylhom import (
    BudgetExceededError,
    SpecializationError,
    dominates,
    family_partitions,
    gauss,
    gauss_poly,
    glue,
    hom_dim,
    hom_kernel,
    normalize,
    phi,
    quantum_char,
    quantum_int,
    straighten,
    theta,
    verify_family,
    verify_membership,
)

__all__ = [
    "BudgetExceededError",
    "SpecializationError",
    "dominates",
    "family_partitions",
    "gauss",
    "gauss_poly",
    "glue",
    "hom_dim",
    "hom_kernel",
    "normalize",
    "phi",
    "quantum_char",
    "quantum_int",
    "straighten",
    "theta",
    "verify_family",
    "verify_membership",
]
