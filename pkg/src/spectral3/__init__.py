"""Closed-form eigenvalues and eigenprojectors of 3x3 matrices.

Invariants are evaluated either naively through I1, I2, I3 or as sums of
products that keep their relative accuracy near repeated eigenvalues.
"""

from .eig3 import AngleMethod, EigenTriple, Multiplicity, NonRealSpectrum, eigenvalues
from .invariants import (
    Route,
    derived_invariants,
    deltap_sop,
    deltaq_subdisc,
    discriminant_naive,
    discriminant_sop,
    principal_invariants,
    subdiscriminant,
)
from .mat3 import Mat3, SingularMatrixError
from .projectors import Projectors, matrix_function, projectors_dual, projectors_frobenius

__all__ = [
    "AngleMethod",
    "EigenTriple",
    "Mat3",
    "Multiplicity",
    "NonRealSpectrum",
    "Projectors",
    "Route",
    "SingularMatrixError",
    "deltap_sop",
    "deltaq_subdisc",
    "derived_invariants",
    "discriminant_naive",
    "discriminant_sop",
    "eigenvalues",
    "matrix_function",
    "principal_invariants",
    "projectors_dual",
    "projectors_frobenius",
    "subdiscriminant",
]
