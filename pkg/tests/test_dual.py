import math
import random

import pytest

from spectral3.dual import NVARS, Dual
from spectral3.eig3 import eigenvalues
from spectral3.mat3 import Mat3


def var(val, index=0):
    return Dual.variable(val, index)


def test_variable_and_lift():
    x = var(2.0, 3)
    assert x.val == 2.0 and x.grad[3] == 1.0 and sum(x.grad) == 1.0
    assert len(x.grad) == NVARS
    assert Dual.lift(5).grad == (0.0,) * NVARS


def test_product_and_quotient_rules():
    x, y = var(3.0, 0), var(5.0, 1)
    p = x * y
    assert p.val == 15.0 and p.grad[:2] == (5.0, 3.0)
    q = x / y
    assert q.grad[0] == pytest.approx(1 / 5) and q.grad[1] == pytest.approx(-3 / 25)
    r = 2.0 / x
    assert r.grad[0] == pytest.approx(-2 / 9)
    s = 1.0 - x * 4 + y
    assert s.grad[:2] == (-4.0, 1.0)


@pytest.mark.parametrize(
    "name, value, derivative",
    [
        ("sqrt", 2.0, 1 / (2 * math.sqrt(2.0))),
        ("cos", 0.7, -math.sin(0.7)),
        ("sin", 0.7, math.cos(0.7)),
        ("acos", 0.3, -1 / math.sqrt(1 - 0.09)),
    ],
)
def test_chain_rule(name, value, derivative):
    y = getattr(var(value), name)()
    assert y.val == getattr(math, name)(value)
    assert y.grad[0] == pytest.approx(derivative, rel=1e-15)


def test_atan2_total_derivative():
    y, x = var(1.5, 0), var(-2.0, 1)
    t = y.atan2(x)
    r2 = 1.5**2 + 2.0**2
    assert t.val == math.atan2(1.5, -2.0)
    assert t.grad[0] == pytest.approx(-2.0 / r2) and t.grad[1] == pytest.approx(-1.5 / r2)
    # a plain float numerator still differentiates through x
    assert Dual.atan2(Dual(1.0), var(1.0, 2)).grad[2] == pytest.approx(-0.5)


def test_sqrt_at_zero_is_not_finite():
    assert not var(0.0).sqrt().is_finite()
    # 0 * inf is left undefined: at a double root sqrt(delta) has no derivative
    # even though delta's own gradient vanishes there
    assert all(math.isnan(g) for g in Dual(0.0).sqrt().grad)
    assert Dual.atan2(Dual(0.0), Dual(0.0)).val == 0.0


def test_comparisons_use_value_only():
    a, b = var(1.0, 0), Dual(1.0)
    assert a == b and not a < b and a <= 1.0 and 2.0 > a
    with pytest.raises(TypeError):
        hash(a)


def test_value_parts_equal_float_pipeline():
    rng = random.Random(8)
    for _ in range(50):
        u = Mat3(rng.uniform(-1, 1) for _ in range(9))
        a = Mat3((u.e[0] + 3, u.e[1], u.e[2], u.e[1], u.e[4] - 1, u.e[5], u.e[2], u.e[5], u.e[8] + 1))
        plain = eigenvalues(a)
        dual = eigenvalues(Mat3(Dual.variable(x, k) for k, x in enumerate(a.e)))
        assert tuple(x.val for x in dual.values) == plain.values
