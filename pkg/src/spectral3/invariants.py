"""Principal invariants, the cubic-resolvent invariants and the discriminant.

Two evaluation routes are provided. The naive route goes through the
principal invariants I1, I2, I3 and cancels catastrophically near repeated
eigenvalues. The sum-of-products (sop) route evaluates the same polynomials
as weighted inner products of factors that each vanish at multiplicity, so
small results keep their relative accuracy.
"""

from dataclasses import dataclass
from enum import Enum
from math import comb
from typing import NamedTuple, Sequence

from .mat3 import Mat3, det3, mat_mul, mat_pow, trace


class Route(str, Enum):
    NAIVE = "naive"
    SOP = "sop"


class PrincipalInvariants(NamedTuple):
    i1: object
    i2: object
    i3: object


@dataclass(frozen=True)
class DerivedInvariants:
    delta_p: object
    delta_q: object
    delta: object
    method: Route


# Multipliers of the 14 condensed products and of the 6 delta_p products.
SOP_D = (9, 6, 6, 6, 8, 8, 8, 2, 2, 2, 2, 2, 2, 1)
SOP_DP = (6, 6, 6, 1, 1, 1)

# Count of nonzero Cauchy-Binet terms before condensation, C(n^2, n) - C(n^2 - n, n).
CAUCHY_BINET_TERMS = comb(9, 3) - comb(6, 3)


def principal_invariants(a: Mat3) -> PrincipalInvariants:
    t = trace(a)
    i2 = (t * t - trace(mat_mul(a, a))) / 2
    return PrincipalInvariants(t, i2, det3(a))


def delta_pq_naive(inv: PrincipalInvariants):
    """(delta_p, delta_q) from the principal invariants."""
    i1, i2, i3 = inv
    dp = i1 * i1 - 3 * i2
    dq = 2 * i1 * i1 * i1 - 9 * i1 * i2 + 27 * i3
    return dp, dq


def discriminant_naive(inv: PrincipalInvariants):
    i1, i2, i3 = inv
    return (
        18 * i1 * i2 * i3
        + i1 * i1 * i2 * i2
        - 4 * i1 * i1 * i1 * i3
        - 4 * i2 * i2 * i2
        - 27 * i3 * i3
    )


def discriminant_dpdq(dp, dq):
    return (4 * dp * dp * dp - dq * dq) / 27


def _xbar(a: Mat3):
    a11, a12, a13, a21, a22, a23, a31, a32, a33 = a.e
    return (
        a12 * a23 * a31 - a13 * a21 * a32,
        a12 * a12 * a23 - a12 * a13 * a22 + a12 * a13 * a33 - a13 * a13 * a32,
        a11 * a12 * a32 - a12 * a12 * a31 - a12 * a32 * a33 + a13 * a32 * a32,
        a11 * a13 * a23 + a12 * a23 * a23 - a13 * a13 * a21 - a13 * a22 * a23,
        a11 * a12 * a23 - a12 * a13 * a21 - a12 * a23 * a33 + a13 * a23 * a32,
        a11 * a13 * a32 - a12 * a13 * a31 + a12 * a23 * a32 - a13 * a22 * a32,
        a12 * a21 * a23 - a13 * a21 * a22 + a13 * a21 * a33 - a13 * a23 * a31,
        a11 * a11 * a23 - a11 * a13 * a21 - a11 * a22 * a23 - a11 * a23 * a33 + a12 * a21 * a23 + a13 * a21 * a33 + a22 * a23 * a33 - a23 * a23 * a32,
        a11 * a11 * a23 - a11 * a13 * a21 - a11 * a22 * a23 - a11 * a23 * a33 + a13 * a21 * a22 + a13 * a23 * a31 + a22 * a23 * a33 - a23 * a23 * a32,
        a11 * a12 * a22 - a11 * a12 * a33 - a12 * a12 * a21 + a12 * a13 * a31 - a12 * a22 * a33 + a12 * a33 * a33 + a13 * a22 * a32 - a13 * a32 * a33,
        a11 * a12 * a22 - a11 * a12 * a33 + a11 * a13 * a32 - a12 * a12 * a21 - a12 * a22 * a33 + a12 * a23 * a32 + a12 * a33 * a33 - a13 * a32 * a33,
        a11 * a12 * a23 - a11 * a13 * a22 + a11 * a13 * a33 - a12 * a22 * a23 - a13 * a13 * a31 + a13 * a22 * a22 - a13 * a22 * a33 + a13 * a23 * a32,
        a11 * a13 * a22 - a11 * a13 * a33 - a12 * a13 * a21 + a12 * a22 * a23 - a12 * a23 * a33 + a13 * a13 * a31 - a13 * a22 * a22 + a13 * a22 * a33,
        a11 * a11 * (a22 - a33) + a22 * a22 * (a33 - a11) + a33 * a33 * (a11 - a22) + a11 * (a13 * a31 - a12 * a21) + a22 * (a12 * a21 - a23 * a32) + a33 * (a23 * a32 - a13 * a31),
    )


def sop_factors(a: Mat3):
    """The 14 condensed factors (xbar, ybar) of the discriminant.

    Each polynomial is evaluated term by term in its printed order; the last
    one keeps its factored form so the differences of diagonal entries are
    formed before multiplying. ybar(A) is xbar(A^T), evaluated as such so
    the two coincide bit for bit on symmetric input.
    """
    return _xbar(a), _xbar(a.transpose())


def _weighted_dot(weights: Sequence[int], x: Sequence, y: Sequence):
    acc = weights[0] * x[0] * y[0]
    for d, u, v in zip(weights[1:], x[1:], y[1:]):
        acc = acc + d * u * v
    return acc


def discriminant_sop(a: Mat3):
    """Discriminant as xbar^T D ybar."""
    xbar, ybar = sop_factors(a)
    return _weighted_dot(SOP_D, xbar, ybar)


def deltap_factors(a: Mat3):
    a11, a12, a13, a21, a22, a23, a31, a32, a33 = a.e
    xp = (a21, a31, a32, -a11 + a22, -a11 + a33, -a22 + a33)
    yp = (a12, a13, a23, -a11 + a22, -a11 + a33, -a22 + a33)
    return xp, yp


def deltap_sop(a: Mat3):
    xp, yp = deltap_factors(a)
    return _weighted_dot(SOP_DP, xp, yp) / 2


def _det(m):
    n = len(m)
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    if n == 3:
        return det3(Mat3(x for row in m for x in row))
    # Laplace expansion along the first row; only reached for |k| > 3
    acc = None
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        term = m[0][j] * _det(minor)
        if acc is None:
            acc = term
        elif j % 2:
            acc = acc - term
        else:
            acc = acc + term
    return acc


def _check_multi_index(k: Sequence[int], name: str):
    if len(k) < 1:
        raise ValueError(f"multi-index {name} must be non-empty")
    if any(x < 0 for x in k) or any(b <= a for a, b in zip(k, k[1:])):
        raise ValueError(f"multi-index {name}={tuple(k)} must be strictly increasing and non-negative")


def subdiscriminant(a: Mat3, k: Sequence[int], l: Sequence[int]):
    """det of the trace-Gram matrix B_kl with entries tr(A^(k_i + l_j))."""
    _check_multi_index(k, "k")
    _check_multi_index(l, "l")
    if len(k) != len(l):
        raise ValueError(f"multi-index lengths differ: {len(k)} != {len(l)}")
    powers = sorted({ki + lj for ki in k for lj in l})
    if powers[-1] > 4:
        raise ValueError("exponent sums above 4 are not supported")
    traces = {p: trace(mat_pow(a, p)) for p in powers}
    gram = [[traces[ki + lj] for lj in l] for ki in k]
    return _det(gram)


def deltaq_subdisc(a: Mat3):
    """delta_q = 3 Delta_(0,1)(0,2) - 4 tr(A) delta_p, with the sop delta_p."""
    return 3 * subdiscriminant(a, (0, 1), (0, 2)) - 4 * trace(a) * deltap_sop(a)


def discriminant_gram(a: Mat3):
    return subdiscriminant(a, (0, 1, 2), (0, 1, 2))


def derived_invariants(a: Mat3, route=Route.SOP) -> DerivedInvariants:
    route = Route(route)
    if route is Route.NAIVE:
        inv = principal_invariants(a)
        dp, dq = delta_pq_naive(inv)
        return DerivedInvariants(dp, dq, discriminant_naive(inv), route)
    return DerivedInvariants(deltap_sop(a), deltaq_subdisc(a), discriminant_sop(a), route)
