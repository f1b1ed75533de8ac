"""Forward-mode dual numbers carrying a gradient over the nine matrix entries."""

import math

NVARS = 9
_ZERO = (0.0,) * NVARS


class Dual:
    """Value plus a fixed-length gradient tuple.

    Arithmetic on ``val`` is exactly the float arithmetic a plain float
    would see, so value parts match working precision bit for bit.
    """

    __slots__ = ("val", "grad")
    extended = False

    def __init__(self, val, grad=_ZERO):
        self.val = float(val)
        self.grad = grad

    @classmethod
    def variable(cls, val, index):
        grad = [0.0] * NVARS
        grad[index] = 1.0
        return cls(val, tuple(grad))

    @classmethod
    def lift(cls, value):
        return cls(value)

    def __repr__(self):
        return f"Dual({self.val!r}, {self.grad!r})"

    def __float__(self):
        return self.val

    # arithmetic ----------------------------------------------------------
    def __add__(self, other):
        if isinstance(other, Dual):
            return Dual(self.val + other.val, tuple(a + b for a, b in zip(self.grad, other.grad)))
        return Dual(self.val + other, self.grad)

    def __radd__(self, other):
        return Dual(other + self.val, self.grad)

    def __sub__(self, other):
        if isinstance(other, Dual):
            return Dual(self.val - other.val, tuple(a - b for a, b in zip(self.grad, other.grad)))
        return Dual(self.val - other, self.grad)

    def __rsub__(self, other):
        return Dual(other - self.val, tuple(-a for a in self.grad))

    def __neg__(self):
        return Dual(-self.val, tuple(-a for a in self.grad))

    def __pos__(self):
        return self

    def __mul__(self, other):
        if isinstance(other, Dual):
            u, v = self.val, other.val
            return Dual(u * v, tuple(u * b + v * a for a, b in zip(self.grad, other.grad)))
        return Dual(self.val * other, tuple(other * a for a in self.grad))

    def __rmul__(self, other):
        return Dual(other * self.val, tuple(other * a for a in self.grad))

    def __truediv__(self, other):
        if isinstance(other, Dual):
            v = self.val / other.val
            w = other.val
            return Dual(v, tuple((a - v * b) / w for a, b in zip(self.grad, other.grad)))
        return Dual(self.val / other, tuple(a / other for a in self.grad))

    def __rtruediv__(self, other):
        v = other / self.val
        w = self.val
        return Dual(v, tuple(-v * b / w for b in self.grad))

    def __abs__(self):
        return -self if self.val < 0 else self

    # comparisons act on the value only ------------------------------------
    def _v(self, other):
        return other.val if isinstance(other, Dual) else other

    def __lt__(self, other):
        return self.val < self._v(other)

    def __le__(self, other):
        return self.val <= self._v(other)

    def __gt__(self, other):
        return self.val > self._v(other)

    def __ge__(self, other):
        return self.val >= self._v(other)

    def __eq__(self, other):
        return self.val == self._v(other)

    __hash__ = None

    # elementary functions ---------------------------------------------------
    def _chain(self, val, slope):
        if math.isfinite(slope):
            return Dual(val, tuple(slope * a for a in self.grad))
        # infinite slope: nonzero directions blow up, zero directions are undefined
        return Dual(val, tuple(math.copysign(math.inf, slope * a) if a else math.nan for a in self.grad))

    def sqrt(self):
        r = math.sqrt(self.val)
        return self._chain(r, 0.5 / r if r > 0.0 else math.inf)

    def cos(self):
        return self._chain(math.cos(self.val), -math.sin(self.val))

    def sin(self):
        return self._chain(math.sin(self.val), math.cos(self.val))

    def acos(self):
        s = 1.0 - self.val * self.val
        return self._chain(math.acos(self.val), -1.0 / math.sqrt(s) if s > 0.0 else -math.inf)

    def atan2(self, x):
        """atan2(self, x) with the total derivative (x dy - y dx) / (x^2 + y^2)."""
        if not isinstance(x, Dual):
            x = Dual(x)
        y0, x0 = self.val, x.val
        r2 = x0 * x0 + y0 * y0
        val = math.atan2(y0, x0)
        if r2 == 0.0:
            return Dual(val, (math.nan,) * NVARS)
        return Dual(val, tuple((x0 * dy - y0 * dx) / r2 for dy, dx in zip(self.grad, x.grad)))

    def is_finite(self):
        return math.isfinite(self.val) and all(math.isfinite(g) for g in self.grad)
