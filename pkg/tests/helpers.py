"""Shared builders for tests: exact rational references and the Case I similarity."""

from fractions import Fraction

from spectral3.ddouble import DoubleDouble
from spectral3.mat3 import Mat3, inverse, mat_mul
from spectral3.oracle import CASE_I
from spectral3.scalar import EPS

U_CASE_I = Mat3.from_rows([[1, -1, 1], [1, 1, 1], [-1, -1, 1]])


def diag(*values) -> Mat3:
    return Mat3.diag(*(float(v) for v in values))


def exact(a: Mat3) -> Mat3:
    return a.map(Fraction)


def case1(*lams) -> Mat3:
    """U diag(lams) U^-1 with the Case I transform, in double-double, rounded."""
    u = CASE_I.matrix()
    lam = Mat3.diag(*(DoubleDouble(x) for x in lams))
    return mat_mul(mat_mul(u, lam), inverse(u)).map(float)


def exact_similar(u: Mat3, lams) -> Mat3:
    uq = exact(u)
    return mat_mul(mat_mul(uq, Mat3.diag(*(Fraction(x) for x in lams))), inverse(uq))


def max_diff(a: Mat3, b) -> float:
    return max(float(abs(Fraction(x) - Fraction(y))) for x, y in zip(a.e, b.e))


def ulps(x: float, ref) -> float:
    """|x - ref| in units of eps * |ref|."""
    ref = Fraction(ref)
    return float(abs(Fraction(x) - ref) / (abs(ref) * Fraction(EPS)))
