"""Fixed-size 3x3 matrices over any scalar with field arithmetic.

Association order is fixed everywhere (left-to-right accumulation) so that
rounding in the invariant formulas is reproducible.
"""

from typing import Iterable, Sequence


class SingularMatrixError(ArithmeticError):
    """Inverse requested for a matrix with zero determinant."""


class Mat3:
    """Immutable row-major 3x3 matrix. ``m[i, j]`` is zero-based."""

    __slots__ = ("e",)

    def __init__(self, entries: Iterable):
        e = tuple(entries)
        if len(e) != 9:
            raise ValueError(f"Mat3 needs 9 entries, got {len(e)}")
        object.__setattr__(self, "e", e)

    def __setattr__(self, name, value):
        raise AttributeError("Mat3 is immutable")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "Mat3":
        if len(rows) != 3 or any(len(r) != 3 for r in rows):
            raise ValueError("Mat3.from_rows needs a 3x3 nested sequence")
        return cls(x for r in rows for x in r)

    @classmethod
    def diag(cls, a, b, c) -> "Mat3":
        z = 0 * a
        return cls((a, z, z, z, b, z, z, z, c))

    def __getitem__(self, ij):
        i, j = ij
        if not (0 <= i < 3 and 0 <= j < 3):
            raise IndexError(f"Mat3 index {ij} out of range")
        return self.e[3 * i + j]

    def entry(self, i: int, j: int):
        """One-based access, A_ij with 1 <= i, j <= 3."""
        return self[i - 1, j - 1]

    def rows(self):
        e = self.e
        return (e[0:3], e[3:6], e[6:9])

    def map(self, f) -> "Mat3":
        return Mat3(f(x) for x in self.e)

    def transpose(self) -> "Mat3":
        e = self.e
        return Mat3((e[0], e[3], e[6], e[1], e[4], e[7], e[2], e[5], e[8]))

    def __add__(self, other: "Mat3") -> "Mat3":
        return Mat3(a + b for a, b in zip(self.e, other.e))

    def __sub__(self, other: "Mat3") -> "Mat3":
        return Mat3(a - b for a, b in zip(self.e, other.e))

    def __neg__(self) -> "Mat3":
        return Mat3(-a for a in self.e)

    def scale(self, s) -> "Mat3":
        return Mat3(s * a for a in self.e)

    def __matmul__(self, other: "Mat3") -> "Mat3":
        return mat_mul(self, other)

    def __eq__(self, other):
        return isinstance(other, Mat3) and self.e == other.e

    def __hash__(self):
        return hash(self.e)

    def __repr__(self):
        return "Mat3.from_rows(%r)" % ([list(r) for r in self.rows()],)

    def __iter__(self):
        return iter(self.e)


IDENTITY = Mat3((1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0))
ZERO = Mat3((0.0,) * 9)


def identity(like=None) -> Mat3:
    """Identity matrix, optionally in the scalar family of ``like``."""
    if like is None:
        return IDENTITY
    one = 0 * like + 1
    z = 0 * like
    return Mat3((one, z, z, z, one, z, z, z, one))


def mat_mul(a: Mat3, b: Mat3) -> Mat3:
    x, y = a.e, b.e
    out = []
    for i in (0, 3, 6):
        for j in (0, 1, 2):
            out.append(x[i] * y[j] + x[i + 1] * y[j + 3] + x[i + 2] * y[j + 6])
    return Mat3(out)


def mat_pow(a: Mat3, p: int) -> Mat3:
    """A**p for p in 0..4 by repeated left multiplication, A^p = A A^(p-1)."""
    if not isinstance(p, int) or isinstance(p, bool) or not 0 <= p <= 4:
        raise ValueError(f"mat_pow supports exponents 0..4, got {p!r}")
    if p == 0:
        return identity(a.e[0])
    result = a
    for _ in range(p - 1):
        result = mat_mul(a, result)
    return result


def trace(a: Mat3):
    e = a.e
    return e[0] + e[4] + e[8]


def det3(a: Mat3):
    a11, a12, a13, a21, a22, a23, a31, a32, a33 = a.e
    return a11 * (a22 * a33 - a23 * a32) - a12 * (a21 * a33 - a23 * a31) + a13 * (a21 * a32 - a22 * a31)


def adjugate(a: Mat3) -> Mat3:
    a11, a12, a13, a21, a22, a23, a31, a32, a33 = a.e
    return Mat3(
        (
            a22 * a33 - a23 * a32,
            a13 * a32 - a12 * a33,
            a12 * a23 - a13 * a22,
            a23 * a31 - a21 * a33,
            a11 * a33 - a13 * a31,
            a13 * a21 - a11 * a23,
            a21 * a32 - a22 * a31,
            a12 * a31 - a11 * a32,
            a11 * a22 - a12 * a21,
        )
    )


def inverse(a: Mat3) -> Mat3:
    d = det3(a)
    if d == 0:
        raise SingularMatrixError("matrix is singular (det = 0)")
    return Mat3(x / d for x in adjugate(a).e)


def max_abs(a: Mat3):
    return max(abs(x) for x in a.e)


def l1_norm(a: Mat3):
    """Entrywise l1 norm, sum of |A_ij|."""
    total = 0.0
    for x in a.e:
        total = total + abs(x)
    return total
