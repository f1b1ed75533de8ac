"""Seeded random test matrices with known real spectra."""

import random
from fractions import Fraction

from .mat3 import Mat3, det3, inverse, mat_mul, max_abs


def random_u(rng: random.Random, bound=2, denom=4, min_det=Fraction(1, 10)) -> Mat3:
    """Rational U with entries in [-bound, bound] on a 1/denom grid and |det U| > min_det."""
    while True:
        u = Mat3(Fraction(rng.randint(-bound * denom, bound * denom), denom) for _ in range(9))
        if abs(det3(u)) > min_det:
            return u


def kappa_inf(u: Mat3) -> float:
    """||U||_inf ||U^-1||_inf."""
    def norm(m):
        return max(sum(abs(x) for x in row) for row in m.rows())
    return float(norm(u) * norm(inverse(u)))


def well_conditioned_u(rng: random.Random, max_kappa=16.0, denom=4) -> Mat3:
    while True:
        u = random_u(rng, denom=denom)
        if kappa_inf(u) <= max_kappa:
            return u


def random_spectrum(rng: random.Random, min_gap=1e-2, lo=-1.0, hi=1.0):
    """Three ascending values in [lo, hi] with pairwise gaps >= min_gap, as exact Fractions."""
    while True:
        lam = sorted(Fraction(rng.uniform(lo, hi)) for _ in range(3))
        if lam[1] - lam[0] >= min_gap and lam[2] - lam[1] >= min_gap:
            return tuple(lam)


def similar(u: Mat3, lam) -> Mat3:
    """U diag(lam) U^-1 evaluated exactly, then rounded to binary64."""
    exact = mat_mul(mat_mul(u, Mat3.diag(*lam)), inverse(u))
    return exact.map(float)


def random_real_matrix(rng: random.Random, min_gap=1e-2):
    """(A, exact spectrum) with A = U diag(lam) U^-1 rounded to binary64."""
    u = random_u(rng)
    lam = random_spectrum(rng, min_gap)
    return similar(u, lam), lam


def random_separated(rng: random.Random, rel_gap=1e-3, max_kappa=16.0):
    """(A, exact spectrum) with eigenvalue gaps >= rel_gap * max|A_ij| and a well-conditioned U."""
    while True:
        u = well_conditioned_u(rng, max_kappa)
        lam = random_spectrum(rng, 0.0)
        a = similar(u, lam)
        if min(lam[1] - lam[0], lam[2] - lam[1]) >= rel_gap * float(max_abs(a)):
            return a, lam


def random_repeated(rng: random.Random, triple=False):
    """(A, exact spectrum) with a double (or triple) eigenvalue, exactly similar to a diagonal."""
    u = random_u(rng)
    mu = Fraction(rng.choice([k for k in range(-8, 9) if k]), 8)
    nu = mu if triple else Fraction(rng.choice([k for k in range(-8, 9) if k != mu * 8]), 8)
    lam = tuple(sorted((mu, mu, nu)))
    return similar(u, lam), lam


def random_symmetric(rng: random.Random, lo=-1.0, hi=1.0) -> Mat3:
    d = [rng.uniform(lo, hi) for _ in range(6)]
    return Mat3((d[0], d[1], d[2], d[1], d[3], d[4], d[2], d[4], d[5]))


def random_dense(rng: random.Random, lo=-1.0, hi=1.0) -> Mat3:
    return Mat3(rng.uniform(lo, hi) for _ in range(9))
