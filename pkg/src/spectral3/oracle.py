"""Reference values for error measurement.

Benchmark matrices B = U diag(lambda) U^-1 are formed in double-double and
rounded to binary64. Ground truth is then recomputed from the *rounded*
matrix, so measured errors are those of the formulas alone and not of the
representation of B.

Polynomial invariants of the rounded matrix are evaluated exactly in
rational arithmetic (binary64 entries are rationals), then stored as
double-double. Eigenvalues come from the arccos formula in double-double.
"""

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional

from .ddouble import DoubleDouble
from .eig3 import AngleMethod, Multiplicity, NonRealSpectrum, angle, eigenvalues3
from .invariants import delta_pq_naive, discriminant_naive, principal_invariants
from .mat3 import IDENTITY, Mat3, inverse, mat_mul, max_abs

DD = DoubleDouble


class CriticalCase(str, Enum):
    DELTA = "delta"
    DELTA_P = "deltap"
    DELTA_Q = "deltaq"

    def spectrum(self, delta):
        """Diagonal of Lambda(delta) in double-double."""
        d = DD(delta)
        one = DD(1.0)
        if self is CriticalCase.DELTA:
            return (DD(-1.0), one, one + d)
        if self is CriticalCase.DELTA_P:
            return (one, one, one + d)
        return (DD(0.0), one, DD(2.0) + d)


@dataclass(frozen=True)
class TransformCase:
    name: str
    gamma: Optional[float] = None

    def matrix(self) -> Mat3:
        if self.name == "case1":
            rows = [[1, -1, 1], [1, 1, 1], [-1, -1, 1]]
            return Mat3(DD(x) for r in rows for x in r)
        if self.gamma is None or not self.gamma > 0:
            raise ValueError("case2 needs gamma > 0")
        g = DD(self.gamma)
        one, zero, two = DD(1.0), DD(0.0), DD(2.0)
        return Mat3((one, one, one, one, zero, one, two, one, two + g))

    def condition_number(self) -> float:
        """kappa_inf(U) = ||U||_inf ||U^-1||_inf."""
        u = self.matrix()
        return _norm_inf(u) * _norm_inf(inverse(u))


CASE_I = TransformCase("case1")


def case_ii(gamma: float) -> TransformCase:
    if not gamma > 0:
        raise ValueError("case2 needs gamma > 0")
    return TransformCase("case2", float(gamma))


def _norm_inf(m: Mat3) -> float:
    return max(sum(abs(float(x)) for x in row) for row in m.rows())


@dataclass(frozen=True)
class GroundTruth:
    eigenvalues: Optional[tuple]
    i1: DoubleDouble
    i2: DoubleDouble
    i3: DoubleDouble
    delta_p: DoubleDouble
    delta_q: DoubleDouble
    delta: DoubleDouble
    matrix: Mat3


def exact_invariants(b: Mat3):
    """(I1, I2, I3, delta_p, delta_q, delta) of a binary64 matrix, as Fractions."""
    q = b.map(Fraction)
    inv = principal_invariants(q)
    dp, dq = delta_pq_naive(inv)
    return (*inv, dp, dq, discriminant_naive(inv))


def reference_invariants(b: Mat3, allow_complex=False) -> GroundTruth:
    """Exact invariants of ``b`` and, when its spectrum is real, its eigenvalues.

    Raises NonRealSpectrum for a complex pair unless ``allow_complex``, in
    which case the invariants are still returned and ``eigenvalues`` is None.
    A rounded benchmark matrix near a triple root can acquire such a pair.
    """
    i1, i2, i3, dp, dq, delta = exact_invariants(b)
    scale = Fraction(float(max_abs(b)))
    lift = DD.from_fraction
    values = None
    # only an O(2^-80) negative discriminant is treated as a rounding-level zero
    real = dp >= 0 and delta >= -Fraction(2) ** -80 * scale**6
    if real:
        dpd = lift(dp)
        phi = angle(lift(max(delta, Fraction(0))), lift(dq), AngleMethod.ARCCOS)
        values = eigenvalues3(lift(i1), dpd, phi)
    elif not allow_complex:
        raise NonRealSpectrum(f"reference discriminant {float(delta):.6g}, delta_p {float(dp):.6g}: complex pair")
    return GroundTruth(values, lift(i1), lift(i2), lift(i3), lift(dp), lift(dq), lift(delta), b)


def make_test_matrix(case, transform: TransformCase, delta: float):
    """Rounded benchmark matrix and the ground truth recomputed from it."""
    if delta < 0:
        raise ValueError("delta must be non-negative")
    case = CriticalCase(case)
    u = transform.matrix()
    lam = Mat3.diag(*case.spectrum(delta))
    b_dd = mat_mul(mat_mul(u, lam), inverse(u))
    b = b_dd.map(float)
    return b, reference_invariants(b, allow_complex=True)


def reference_projectors(truth: GroundTruth):
    """Frobenius covariants of the rounded matrix in double-double.

    Returns one projector per reference eigenvalue (ascending order).
    Coincident reference eigenvalues get ``None``; callers only use the
    merged cluster projector in that case.
    """
    if truth.eigenvalues is None:
        raise NonRealSpectrum("reference spectrum is not real")
    b = truth.matrix.map(DD)
    lam = truth.eigenvalues
    eye = IDENTITY.map(DD)
    out = []
    for k in range(3):
        p = eye
        ok = True
        for i in range(3):
            if i == k:
                continue
            gap = lam[k] - lam[i]
            if gap == 0:
                ok = False
                break
            p = mat_mul(p, (b - eye.scale(lam[i])).map(lambda x, g=gap: x / g))
        out.append(p if ok else None)
    return out


def merged_reference(truth: GroundTruth, multiplicity: Multiplicity):
    """Reference projectors grouped the way a decomposition of that multiplicity reports them."""
    eye = IDENTITY.map(DD)
    if multiplicity is Multiplicity.TRIPLE:
        return [eye]
    projs = reference_projectors(truth)
    if multiplicity is Multiplicity.DISTINCT:
        if any(p is None for p in projs):
            raise ArithmeticError("reference spectrum is not distinct")
        return projs
    simple = projs[0] if multiplicity is Multiplicity.DOUBLE_HIGH else projs[2]
    if simple is None:
        raise ArithmeticError("reference simple eigenvalue coincides with the cluster")
    rest = eye - simple
    return [simple, rest] if multiplicity is Multiplicity.DOUBLE_HIGH else [rest, simple]


def sweep_grid(start=1e-15, stop=1.0, points_per_decade=4):
    """Logarithmic delta grid with both endpoints included."""
    if not (0 < start <= stop):
        raise ValueError("need 0 < start <= stop")
    decades = math.log10(stop / start)
    n = math.floor(points_per_decade * decades + 1e-9) + 1
    if n == 1:
        return [float(start)]
    grid = [start * (stop / start) ** (i / (n - 1)) for i in range(n)]
    grid[0], grid[-1] = float(start), float(stop)
    return grid
