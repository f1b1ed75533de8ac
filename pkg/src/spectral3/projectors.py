"""Eigenprojectors and matrix functions.

The primary route differentiates the closed-form eigenvalues with dual
numbers: the transposed gradient of lambda_k with respect to A is E_k.
"""

import math
from dataclasses import dataclass
from typing import Callable

from . import scalar
from .dual import Dual
from .eig3 import AngleMethod, EigenTriple, Multiplicity, eigenvalues
from .invariants import Route, deltap_sop, delta_pq_naive, principal_invariants
from .mat3 import IDENTITY, Mat3, mat_mul, max_abs, trace

GAP_FLOOR = 64 * scalar.EPS


class DegenerateGradient(ArithmeticError):
    """A spectrum classified as distinct produced non-finite derivatives."""


class DegenerateSpectrum(ArithmeticError):
    """Two eigenvalues are too close for the Lagrange-interpolant projectors."""


@dataclass(frozen=True)
class Projectors:
    """(eigenvalue, projector) pairs in ascending eigenvalue order.

    Repeated eigenvalues share one merged projector onto their eigenspace.
    """

    pairs: tuple
    multiplicity: Multiplicity

    def __iter__(self):
        return iter(self.pairs)

    def __len__(self):
        return len(self.pairs)

    @property
    def values(self):
        return tuple(v for v, _ in self.pairs)

    @property
    def matrices(self):
        return tuple(m for _, m in self.pairs)


def _dual_matrix(a: Mat3) -> Mat3:
    return Mat3(Dual.variable(x, k) for k, x in enumerate(a.e))


def _grad_projector(lam: Dual) -> Mat3:
    # E_k^T = d lambda_k / dA, gradient index 3*i + j holds d/dA_ij
    g = lam.grad
    return Mat3((g[0], g[3], g[6], g[1], g[4], g[7], g[2], g[5], g[8]))


def _simple_root(ad: Mat3, route: Route, high_cluster: bool):
    """Closed form of the simple eigenvalue when the other two coincide.

    With delta = 0 the angle is pinned to 0 or pi/3 and the roots reduce to
    (I1 -/+ 2 sqrt(delta_p)) / 3; its gradient is finite, unlike the
    general formula's, whose sqrt(delta) term has an infinite slope there.
    """
    if route is Route.NAIVE:
        dp, _ = delta_pq_naive(principal_invariants(ad))
    else:
        dp = deltap_sop(ad)
    r = 2 * dp.sqrt()
    i1 = trace(ad)
    return (i1 - r) / 3 if high_cluster else (i1 + r) / 3


def projectors_dual(a: Mat3, route=Route.SOP, method=AngleMethod.ARCTAN, triple: EigenTriple = None) -> Projectors:
    """Eigenprojectors as transposed eigenvalue gradients (forward-mode AD)."""
    route = Route(route)
    triple = triple if triple is not None else eigenvalues(a, route, method)
    vals = triple.values
    mult = triple.multiplicity
    if mult is Multiplicity.TRIPLE:
        return Projectors(((sum(vals) / 3, IDENTITY),), mult)

    ad = _dual_matrix(a)
    if mult is Multiplicity.DISTINCT:
        lam = eigenvalues(ad, route, method).values
        if not all(x.is_finite() for x in lam):
            raise DegenerateGradient("eigenvalue gradients are not finite; spectrum is nearly degenerate")
        return Projectors(tuple((x.val, _grad_projector(x)) for x in lam), mult)

    high = mult is Multiplicity.DOUBLE_HIGH
    lam_s = _simple_root(ad, route, high)
    if not lam_s.is_finite():
        raise DegenerateGradient("simple-eigenvalue gradient is not finite")
    e_s = _grad_projector(lam_s)
    rest = IDENTITY - e_s
    if high:
        return Projectors(((vals[0], e_s), ((vals[1] + vals[2]) / 2, rest)), mult)
    return Projectors((((vals[0] + vals[1]) / 2, rest), (vals[2], e_s)), mult)


def projectors_frobenius(a: Mat3, lambdas, gap_floor=GAP_FLOOR) -> Projectors:
    """Frobenius covariants prod_{i != k} (A - lambda_i I) / (lambda_k - lambda_i)."""
    lam = tuple(lambdas)
    scale = float(max_abs(a))
    eye = IDENTITY
    for i in range(3):
        for j in range(i + 1, 3):
            if abs(lam[i] - lam[j]) <= gap_floor * max(scale, 1e-300):
                raise DegenerateSpectrum(f"eigenvalues {lam[i]!r} and {lam[j]!r} are not distinct")
    pairs = []
    for k in range(3):
        p = None
        for i in range(3):
            if i == k:
                continue
            factor = (a - eye.scale(lam[i])).scale(1.0 / (lam[k] - lam[i]))
            p = factor if p is None else mat_mul(p, factor)
        pairs.append((lam[k], p))
    return Projectors(tuple(pairs), Multiplicity.DISTINCT)


def matrix_function(a: Mat3, f: Callable, route=Route.SOP, method=AngleMethod.ARCTAN) -> Mat3:
    """Sylvester interpolation f(A) = sum_k f(lambda_k) E_k."""
    acc = None
    for lam, e in projectors_dual(a, route, method):
        term = e.scale(f(lam))
        acc = term if acc is None else acc + term
    return acc


def l1_error(computed: Projectors, reference) -> float:
    """Summed entrywise absolute error over matched projectors."""
    if len(computed) != len(reference):
        raise ValueError("projector groups do not match")
    total = 0.0
    for (_, e), r in zip(computed, reference):
        for x, y in zip(e.e, r.e):
            total += abs(float(x - y))
    return total


def is_finite(m: Mat3) -> bool:
    return all(math.isfinite(x) for x in m.e)
