"""Closed-form eigenvalues of 3x3 matrices with real spectrum.

lambda_k = (I1 + 2 sqrt(delta_p) cos(phi + 2 pi k / 3)) / 3,  k = 1, 2, 3

with the angle phi recovered from (delta, delta_q) by one of three
interchangeable formulas.
"""

from dataclasses import dataclass
from enum import Enum

from . import scalar
from .invariants import DerivedInvariants, Route, derived_invariants
from .mat3 import Mat3, max_abs, trace


class NonRealSpectrum(ArithmeticError):
    """The matrix has a complex-conjugate eigenvalue pair."""


class AngleMethod(str, Enum):
    ARCCOS = "arccos"
    ARCTAN = "arctan"
    SERIES = "series"


class Multiplicity(str, Enum):
    DISTINCT = "Distinct"
    DOUBLE_LOW = "DoubleLow"  # lambda1 == lambda2 < lambda3
    DOUBLE_HIGH = "DoubleHigh"  # lambda1 < lambda2 == lambda3
    TRIPLE = "Triple"


# Clamp/classification thresholds relative to max|A_ij|^degree. The sop route
# keeps near-zero invariants accurate to ~eps^2; the naive route leaves
# noise of order eps, which needs a wider clamp to avoid false complex verdicts.
TAU = {
    Route.SOP: (1e-24, 1e-24),
    Route.NAIVE: (1e-12, 1e-12),
}
TAU_P = 1e-24
TAU_DELTA = 1e-24


@dataclass(frozen=True)
class EigenTriple:
    values: tuple
    phi: object
    multiplicity: Multiplicity
    i1: object = None
    derived: DerivedInvariants = None

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, k):
        return self.values[k]


def angle(delta, delta_q, method=AngleMethod.ARCTAN):
    """Angle phi in [0, pi/3] from the discriminant and delta_q.

    ``delta`` must already be clamped to be non-negative.
    """
    method = AngleMethod(method)
    sqrt_delta = scalar.sqrt(delta)
    c = 3 * scalar.sqrt(scalar.lift(3, delta))  # 3 sqrt(3)
    if method is AngleMethod.ARCTAN:
        # "+ 0" maps a signed zero to +0.0, keeping the angle in [0, pi/3]
        # and making (0, 0) give 0 like the arccos form
        return scalar.atan2(c * sqrt_delta + 0, delta_q + 0) / 3
    if method is AngleMethod.ARCCOS:
        den = scalar.sqrt(delta_q * delta_q + 27 * delta)
        if den == 0:
            # delta = delta_q = 0 forces delta_p = 0; any angle gives the triple root
            return 0 * delta
        x = delta_q / den
        if x > 1:
            x = 0 * x + 1
        elif x < -1:
            x = 0 * x - 1
        return scalar.acos(x) / 3
    # truncated expansion of atan around sqrt(delta) = 0
    if delta_q == 0 or 27 * delta > delta_q * delta_q:
        raise ValueError("series angle needs 27*delta <= delta_q**2 and delta_q != 0")
    t = c * sqrt_delta / delta_q
    t2 = t * t
    base = 0 * t if delta_q > 0 else 0 * t + scalar.pi(delta)
    return (base + t - t * t2 / 3 + t * t2 * t2 / 5) / 3


def eigenvalues3(i1, delta_p, phi):
    """The three roots for k = 1, 2, 3; ascending whenever phi is in [0, pi/3]."""
    r = 2 * scalar.sqrt(delta_p)
    two_pi = 2 * scalar.pi(phi)
    return tuple((i1 + r * scalar.cos(phi + two_pi * k / 3)) / 3 for k in (1, 2, 3))


def classify_multiplicity(delta, delta_p, scale, delta_q=0.0, tau_p=TAU_P, tau_delta=TAU_DELTA):
    s2 = scale * scale
    if delta_p <= tau_p * s2:
        return Multiplicity.TRIPLE
    if delta <= tau_delta * s2 * s2 * s2:
        return Multiplicity.DOUBLE_LOW if delta_q > 0 else Multiplicity.DOUBLE_HIGH
    return Multiplicity.DISTINCT


def _clamp(value, tol, what):
    if value <= 0:
        if value < -tol:
            raise NonRealSpectrum(f"{what} = {float(value):.6g} is negative beyond rounding level")
        # "+ 0" so a -0.0 never reaches atan2
        return 0 * value + 0
    return value


def eigenvalues(a: Mat3, route=Route.SOP, method=AngleMethod.ARCTAN, tau_p=None, tau_delta=None) -> EigenTriple:
    """Eigenvalues of ``a`` sorted ascending, with angle and multiplicity.

    Raises NonRealSpectrum when the computed discriminant is negative beyond
    the clamp tolerance.
    """
    route = Route(route)
    default_p, default_delta = TAU[route]
    tau_p = default_p if tau_p is None else tau_p
    tau_delta = default_delta if tau_delta is None else tau_delta

    inv = derived_invariants(a, route)
    scale = float(max_abs(a))
    s2 = scale * scale
    dp = _clamp(inv.delta_p, tau_p * s2, "delta_p")
    delta = _clamp(inv.delta, tau_delta * s2 * s2 * s2, "discriminant")
    phi = angle(delta, inv.delta_q, method)
    i1 = trace(a)
    values = eigenvalues3(i1, dp, phi)
    mult = classify_multiplicity(delta, dp, scale, inv.delta_q, tau_p, tau_delta)
    derived = DerivedInvariants(dp, inv.delta_q, delta, route)
    return EigenTriple(values, phi, mult, i1, derived)
