import random
from fractions import Fraction

import pytest

from helpers import U_CASE_I, case1, diag, exact, exact_similar
from spectral3 import invariants as inv_mod
from spectral3.invariants import (
    CAUCHY_BINET_TERMS,
    SOP_D,
    SOP_DP,
    PrincipalInvariants,
    Route,
    delta_pq_naive,
    deltap_factors,
    deltap_sop,
    deltaq_subdisc,
    derived_invariants,
    discriminant_dpdq,
    discriminant_gram,
    discriminant_naive,
    discriminant_sop,
    principal_invariants,
    sop_factors,
    subdiscriminant,
)
from spectral3.mat3 import IDENTITY, Mat3, inverse, mat_mul, max_abs
from spectral3.oracle import exact_invariants
from spectral3.randmat import random_repeated, random_symmetric, random_u
from spectral3.scalar import EPS

def gap_product(lams):
    a, b, c = lams
    return ((a - b) * (a - c) * (b - c)) ** 2


def test_principal_invariants_examples():
    assert principal_invariants(diag(1, 2, 3)) == (6, 11, 6)
    assert principal_invariants(IDENTITY) == (3, 3, 1)
    d = Fraction(1, 1000)
    a = exact_similar(U_CASE_I, (1 + d, 1, -2 - d))
    assert principal_invariants(a) == (0, -3 - 3 * d - d * d, -2 - 3 * d - d * d)


def test_delta_pq_naive_examples():
    assert delta_pq_naive(PrincipalInvariants(6, 11, 6)) == (3, 0)
    assert delta_pq_naive(PrincipalInvariants(3, 3, 1)) == (0, 0)
    assert delta_pq_naive(PrincipalInvariants(1, -1, -1)) == (4, -16)


def test_discriminant_naive_examples():
    assert discriminant_naive(PrincipalInvariants(6, 11, 6)) == 4
    assert discriminant_naive(PrincipalInvariants(3, 3, 1)) == 0


def test_naive_discriminant_cancels_totally_for_traceless_example():
    # invariants of the spectrum (1 + d, 1, -2 - d) rounded to binary64 lose d^2
    d = 1e-9
    i2 = -3.0 - 3.0 * d - d * d
    i3 = -2.0 - 3.0 * d - d * d
    assert i2 == -3.0 - 3.0 * d and i3 == -2.0 - 3.0 * d
    assert discriminant_naive(PrincipalInvariants(0.0, i2, i3)) == 0.0


def test_discriminant_dpdq_examples():
    assert discriminant_dpdq(3, 0) == 4
    assert discriminant_dpdq(0, 0) == 0
    assert discriminant_dpdq(4, -16) == 0


def test_sop_tables():
    assert SOP_D == (9, 6, 6, 6, 8, 8, 8, 2, 2, 2, 2, 2, 2, 1)
    assert SOP_DP == (6, 6, 6, 1, 1, 1)
    xbar, ybar = sop_factors(diag(1, 2, 3))
    assert len(xbar) == len(ybar) == 14
    assert len(deltap_factors(IDENTITY)[0]) == 6
    assert CAUCHY_BINET_TERMS == 64


def test_discriminant_sop_examples():
    xbar, ybar = sop_factors(diag(1, 2, 3))
    assert all(x == 0 for x in xbar[:13]) and all(y == 0 for y in ybar[:13])
    assert xbar[13] * ybar[13] == 4
    assert discriminant_sop(diag(1, 2, 3)) == 4
    xbar, ybar = sop_factors(IDENTITY)
    assert all(x == 0 for x in xbar + ybar)
    assert discriminant_sop(IDENTITY) == 0


def test_discriminant_sop_near_double_root():
    # relative error at delta = 1e-10 grows like eps/delta; measured ~4e-8,
    # checked at the 1e-6 acceptance level
    b = case1(-1.0, 1.0, 1.0 + 1e-10)
    ref = exact_invariants(b)[5]
    assert abs(Fraction(discriminant_sop(b)) - ref) / ref < 1e-6
    assert float(ref) == pytest.approx(16e-20, rel=1e-9)


def test_deltap_sop_examples():
    d = 1e-5
    a = diag(1, 1, 1 + d)
    step = (1 + d) - 1.0  # the perturbation actually stored
    assert deltap_sop(a) == pytest.approx(step * step, rel=4 * EPS)
    assert deltap_sop(IDENTITY) == 0
    assert deltap_sop(diag(1, 2, 3)) == 3


def test_deltap_sop_reads_indices_one_based():
    a = Mat3.from_rows([[1.0, 2.0, 3.0], [4.0, 5.0, 6.0], [7.0, 8.0, 10.0]])
    by_hand = (6 * (4 * 2 + 7 * 3 + 8 * 6) + (5 - 1) ** 2 + (10 - 1) ** 2 + (10 - 5) ** 2) / 2
    assert deltap_sop(a) == by_hand == delta_pq_naive(principal_invariants(a))[0]


def test_subdiscriminant_examples():
    a = Mat3.from_rows([[1.0, 2.0, 0.5], [0.0, 3.0, 1.0], [2.0, 1.0, -1.0]])
    assert subdiscriminant(a, (0,), (1,)) == 3.0
    assert subdiscriminant(a, (1,), (0,)) == 3.0
    assert subdiscriminant(IDENTITY, (0, 1), (0, 1)) == 0
    assert subdiscriminant(diag(1, 2, 3), (0, 1, 2), (0, 1, 2)) == 4


@pytest.mark.parametrize(
    "k, l",
    [((0, 1), (0,)), ((1, 0), (0, 1)), ((0, 0), (0, 1)), ((), ()), ((0, 3), (0, 2)), ((-1,), (0,))],
)
def test_subdiscriminant_rejects_bad_multi_indices(k, l):
    with pytest.raises(ValueError):
        subdiscriminant(IDENTITY, k, l)


def test_deltaq_subdisc_examples():
    assert deltaq_subdisc(diag(0, 1, 2)) == 0
    assert deltaq_subdisc(IDENTITY) == 0
    assert deltaq_subdisc(diag(-1, 1, 1)) == -16


def test_discriminant_gram_examples():
    assert discriminant_gram(diag(1, 2, 3)) == 4
    assert discriminant_gram(IDENTITY) == 0
    assert discriminant_gram(diag(5, 5, 2)) == 0


def test_diagonal_invariants_are_elementary_symmetric():
    rng = random.Random(21)
    for _ in range(50):
        a, b, c = (Fraction(rng.randint(-9, 9), 3) for _ in range(3))
        assert principal_invariants(Mat3.diag(a, b, c)) == (a + b + c, a * b + a * c + b * c, a * b * c)


def test_all_routes_agree_exactly_on_integer_matrices():
    rng = random.Random(22)
    for _ in range(300):
        a = Mat3(Fraction(rng.randint(-5, 5)) for _ in range(9))
        inv = principal_invariants(a)
        dp, dq = delta_pq_naive(inv)
        naive = discriminant_naive(inv)
        assert discriminant_sop(a) == naive == discriminant_gram(a) == discriminant_dpdq(dp, dq)
        assert deltap_sop(a) == dp
        assert deltaq_subdisc(a) == dq
        assert subdiscriminant(a, (0, 1), (0, 1)) == 2 * dp
        assert 3 * subdiscriminant(a, (0, 1), (0, 2)) - 4 * inv.i1 * dp == dq


def test_discriminant_is_product_of_squared_gaps():
    rng = random.Random(23)
    for _ in range(200):
        u = random_u(rng)
        lams = tuple(Fraction(rng.randint(-12, 12), 4) for _ in range(3))
        a = exact_similar(u, lams)
        d = derived_invariants(a, Route.SOP)
        assert d.delta == gap_product(lams)
        assert d.delta_p >= 0 and d.delta >= 0
        assert d.delta == discriminant_dpdq(d.delta_p, d.delta_q)


def test_sub_discriminants_are_similarity_invariant():
    rng = random.Random(24)
    for _ in range(100):
        a = Mat3(Fraction(rng.randint(-4, 4)) for _ in range(9))
        b = conjugate(random_u(rng), a)
        for k, l in (((0,), (1,)), ((0, 1), (0, 1)), ((0, 1), (0, 2)), ((0, 1, 2), (0, 1, 2))):
            assert subdiscriminant(a, k, l) == subdiscriminant(b, k, l)


def conjugate(u, a):
    uq = exact(u)
    return mat_mul(mat_mul(uq, a), inverse(uq))


def test_symmetric_input_gives_equal_factor_tables():
    rng = random.Random(25)
    for _ in range(200):
        a = random_symmetric(rng)
        xbar, ybar = sop_factors(a)
        assert xbar == ybar
        xp, yp = deltap_factors(a)
        assert xp == yp
        assert discriminant_sop(a) >= 0


def test_factors_vanish_at_repeated_eigenvalue():
    rng = random.Random(26)
    for _ in range(200):
        a, _ = random_repeated(rng, triple=rng.random() < 0.2)
        s = float(max_abs(a))
        xbar, ybar = sop_factors(a)
        assert max(abs(x) for x in xbar + ybar) <= 64 * EPS * s**3


def test_factors_vanish_exactly_in_rational_arithmetic():
    rng = random.Random(27)
    for _ in range(100):
        mu = Fraction(rng.randint(-8, 8), 4)
        nu = Fraction(rng.randint(-8, 8), 4)
        a = exact_similar(random_u(rng), (mu, mu, nu))
        xbar, ybar = sop_factors(a)
        assert all(x == 0 for x in xbar + ybar)


@pytest.mark.parametrize("f, degree", [(discriminant_sop, 6), (deltap_sop, 2), (deltaq_subdisc, 3)])
def test_scaling_law_for_powers_of_two(f, degree):
    rng = random.Random(28)
    for _ in range(200):
        a = Mat3(rng.uniform(-1, 1) for _ in range(9))
        s = 2.0 ** rng.randint(-40, 40)
        assert f(a.scale(s)) == f(a) * s**degree


def test_derived_invariants_routes():
    for route in Route:
        d = derived_invariants(diag(1, 2, 3), route)
        assert (d.delta_p, d.delta_q, d.delta, d.method) == (3, 0, 4, route)
    assert derived_invariants(IDENTITY, "sop").method is Route.SOP
    with pytest.raises(ValueError):
        derived_invariants(IDENTITY, "fast")


def test_fault_in_coefficient_table_is_detected(monkeypatch):
    a = Mat3(Fraction(x) for x in (2, -1, 3, 0, 1, 4, -2, 5, 1))
    naive = discriminant_naive(principal_invariants(a))
    assert discriminant_sop(a) == naive
    monkeypatch.setattr(inv_mod, "SOP_D", (9, 6, 6, 6, 8, 8, 8, 2, 2, 2, 2, 2, 3, 1))
    assert inv_mod.discriminant_sop(a) != naive
