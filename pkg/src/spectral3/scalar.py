"""Elementary functions dispatched over the scalar types used by the library.

Plain ``float``/``int`` values go through :mod:`math`; any other scalar
(double-double, dual number) must provide ``sqrt``, ``cos``, ``sin``,
``acos`` and ``atan2`` methods.
"""

import math
from fractions import Fraction

EPS = 2.0**-52

_NATIVE = (int, float)


def sqrt(x):
    if isinstance(x, _NATIVE):
        return math.sqrt(x)
    return x.sqrt()


def cos(x):
    if isinstance(x, _NATIVE):
        return math.cos(x)
    return x.cos()


def sin(x):
    if isinstance(x, _NATIVE):
        return math.sin(x)
    return x.sin()


def acos(x):
    if isinstance(x, _NATIVE):
        return math.acos(x)
    return x.acos()


def atan2(y, x):
    if isinstance(y, _NATIVE) and isinstance(x, _NATIVE):
        return math.atan2(y, x)
    if isinstance(y, _NATIVE):
        return type(x).lift(y).atan2(x)
    return y.atan2(x)


def sign(x):
    """Return -1, 0 or +1 as an int."""
    return (x > 0) - (x < 0)


def lift(value, like):
    """Convert a Python number into the arithmetic family of ``like``.

    Dual numbers mix freely with floats, so only extended-precision and
    rational scalars need an explicit conversion.
    """
    if isinstance(like, Fraction):
        return Fraction(value)
    lifter = getattr(type(like), "lift", None)
    if lifter is None or not getattr(type(like), "extended", False):
        return float(value)
    return lifter(value)


def pi(like):
    """pi at the precision of ``like``."""
    const = getattr(type(like), "PI", None)
    if const is not None and getattr(type(like), "extended", False):
        return const
    return math.pi


def to_float(x):
    return float(x)
