"""Double-double arithmetic: an unevaluated sum ``hi + lo`` of two binary64 numbers.

Roughly 106 significant bits. Used only as reference precision for error
measurements, so clarity wins over speed here.
"""

import math
from fractions import Fraction


def two_sum(a, b):
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def quick_two_sum(a, b):
    # requires |a| >= |b| (or a == 0)
    s = a + b
    return s, b - (s - a)


_SPLITTER = 134217729.0  # 2**27 + 1


def split(a):
    c = _SPLITTER * a
    hi = c - (c - a)
    return hi, a - hi


if hasattr(math, "fma"):

    def two_prod(a, b):
        p = a * b
        return p, math.fma(a, b, -p)

else:

    def two_prod(a, b):
        p = a * b
        ahi, alo = split(a)
        bhi, blo = split(b)
        return p, ((ahi * bhi - p) + ahi * blo + alo * bhi) + alo * blo


class DoubleDouble:
    """Normalised pair with ``|lo| <= ulp(hi) / 2``."""

    __slots__ = ("hi", "lo")
    extended = True
    PI = None  # set below

    def __init__(self, hi, lo=0.0):
        hi = float(hi)
        lo = float(lo)
        s, e = two_sum(hi, lo)
        self.hi = s
        self.lo = e

    @classmethod
    def lift(cls, value):
        if isinstance(value, DoubleDouble):
            return value
        if isinstance(value, Fraction):
            return cls.from_fraction(value)
        if isinstance(value, int) and abs(value) > 2**53:
            return cls.from_fraction(Fraction(value))
        return cls(value)

    @classmethod
    def from_fraction(cls, q):
        hi = float(q)
        lo = float(q - Fraction(hi))
        return cls(hi, lo)

    def to_fraction(self):
        return Fraction(self.hi) + Fraction(self.lo)

    def __float__(self):
        return self.hi

    def __repr__(self):
        return f"DoubleDouble({self.hi!r}, {self.lo!r})"

    # arithmetic -------------------------------------------------------------
    @staticmethod
    def _wrap(x):
        return x if isinstance(x, DoubleDouble) else DoubleDouble.lift(x)

    def __add__(self, other):
        o = self._wrap(other)
        s, e = two_sum(self.hi, o.hi)
        t, f = two_sum(self.lo, o.lo)
        e += t
        s, e = quick_two_sum(s, e)
        e += f
        s, e = quick_two_sum(s, e)
        return _raw(s, e)

    __radd__ = __add__

    def __neg__(self):
        return _raw(-self.hi, -self.lo)

    def __pos__(self):
        return self

    def __sub__(self, other):
        return self + (-self._wrap(other))

    def __rsub__(self, other):
        return self._wrap(other) + (-self)

    def __mul__(self, other):
        o = self._wrap(other)
        p, e = two_prod(self.hi, o.hi)
        e += self.hi * o.lo + self.lo * o.hi
        p, e = quick_two_sum(p, e)
        return _raw(p, e)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._wrap(other)
        if o.hi == 0.0:
            raise ZeroDivisionError("double-double division by zero")
        q1 = self.hi / o.hi
        r = self - o * q1
        q2 = r.hi / o.hi
        r = r - o * q2
        q3 = r.hi / o.hi
        q1, q2 = quick_two_sum(q1, q2)
        return _raw(q1, q2) + q3

    def __rtruediv__(self, other):
        return self._wrap(other) / self

    def __abs__(self):
        return -self if self.hi < 0.0 else self

    # comparisons --------------------------------------------------------------
    def _key(self, other):
        o = self._wrap(other)
        return (self.hi, self.lo), (o.hi, o.lo)

    def __lt__(self, other):
        a, b = self._key(other)
        return a < b

    def __le__(self, other):
        a, b = self._key(other)
        return a <= b

    def __gt__(self, other):
        a, b = self._key(other)
        return a > b

    def __ge__(self, other):
        a, b = self._key(other)
        return a >= b

    def __eq__(self, other):
        if not isinstance(other, (DoubleDouble, int, float, Fraction)):
            return NotImplemented
        a, b = self._key(other)
        return a == b

    def __hash__(self):
        return hash((self.hi, self.lo))

    # elementary functions -------------------------------------------------------
    def sqrt(self):
        if self.hi < 0.0:
            raise ValueError("sqrt of negative double-double")
        if self.hi == 0.0:
            return _raw(0.0, 0.0)
        x = math.sqrt(self.hi)
        # one Newton step on the working-precision root doubles the accuracy
        r = _raw(x, 0.0)
        return r + (self - r * r) / (2.0 * x)

    def _sincos_reduced(self):
        """sin and cos of ``self``, assumed |self| <= pi/4, by Taylor series."""
        x2 = self * self
        term = self
        s = self
        k = 1
        while abs(term.hi) > 1e-36:
            term = term * x2 / ((k + 1) * (k + 2))
            term = -term
            s = s + term
            k += 2
        term = _raw(1.0, 0.0)
        c = term
        k = 0
        while abs(term.hi) > 1e-36:
            term = -(term * x2 / ((k + 1) * (k + 2)))
            c = c + term
            k += 2
        return s, c

    def _sincos(self):
        n = round(self.hi / (math.pi / 2))
        r = self - HALF_PI * n
        s, c = r._sincos_reduced()
        q = n % 4
        if q == 0:
            return s, c
        if q == 1:
            return c, -s
        if q == 2:
            return -s, -c
        return -c, s

    def sin(self):
        return self._sincos()[0]

    def cos(self):
        return self._sincos()[1]

    def atan2(self, x):
        """Angle of the point (x, self); Newton-corrected from the binary64 angle."""
        x = self._wrap(x)
        if self.hi == 0.0 and x.hi == 0.0:
            return _raw(0.0, 0.0)
        theta = _raw(math.atan2(self.hi, x.hi), 0.0)
        for _ in range(2):
            s, c = theta._sincos()
            theta = theta + (self * c - x * s) / (x * c + self * s)
        return theta

    def acos(self):
        if abs(self.hi) > 1.0:
            raise ValueError("acos argument outside [-1, 1]")
        one = _raw(1.0, 0.0)
        s = ((one - self) * (one + self)).sqrt()
        return s.atan2(self)


def _raw(hi, lo):
    obj = object.__new__(DoubleDouble)
    obj.hi = hi
    obj.lo = lo
    return obj


# pi to ~107 bits
DoubleDouble.PI = _raw(3.141592653589793, 1.2246467991473532e-16)
HALF_PI = _raw(1.5707963267948966, 6.123233995736766e-17)
