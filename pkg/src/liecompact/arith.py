"""Exact rational and Gaussian-rational arithmetic, plus definiteness testing.

Rationals are :class:`fractions.Fraction` (arbitrary precision, always in
lowest terms).  :class:`GaussianRational` adjoins ``i`` to them; it is never
backed by a complex float.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, Sequence, Union

Rational = Fraction
Scalar = Union[int, Fraction, "GaussianRational"]

_ZERO = Fraction(0)


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, _RationalABC)):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


class GaussianRational:
    """An element ``re + im*i`` of Q(i) with exact rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _as_fraction(re))
        object.__setattr__(self, "im", _as_fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @classmethod
    def coerce(cls, value) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, complex):
            raise TypeError("complex floats are not exact; build a GaussianRational")
        return cls(value)

    def conj(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def is_real(self) -> bool:
        return self.im == 0

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __add__(self, other):
        if isinstance(other, GaussianRational):
            return GaussianRational(self.re + other.re, self.im + other.im)
        if isinstance(other, (int, Fraction)):
            return GaussianRational(self.re + other, self.im)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, GaussianRational):
            return GaussianRational(self.re - other.re, self.im - other.im)
        if isinstance(other, (int, Fraction)):
            return GaussianRational(self.re - other, self.im)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, Fraction)):
            return GaussianRational(other - self.re, -self.im)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, GaussianRational):
            a, b, c, d = self.re, self.im, other.re, other.im
            return GaussianRational(a * c - b * d, a * d + b * c)
        if isinstance(other, (int, Fraction)):
            return GaussianRational(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero in Q(i)")
            return GaussianRational(self.re / other, self.im / other)
        if isinstance(other, GaussianRational):
            n = other.norm()
            if n == 0:
                raise ZeroDivisionError("division by zero in Q(i)")
            return self * other.conj() / n
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return GaussianRational(other) / self
        return NotImplemented

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"GaussianRational({self.re}, {self.im})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"


I = GaussianRational(0, 1)


def conj(z: Scalar) -> GaussianRational:
    """Complex conjugate of ``z`` (rationals are returned as real Gaussians)."""
    return GaussianRational.coerce(z).conj()


class SymMatrix:
    """Immutable symmetric matrix with exact rational entries."""

    __slots__ = ("dim", "_rows")

    def __init__(self, rows: Iterable[Sequence]):
        rows = tuple(tuple(_as_fraction(v) for v in row) for row in rows)
        n = len(rows)
        if n == 0:
            raise ValueError("SymMatrix needs dim >= 1")
        for i, row in enumerate(rows):
            if len(row) != n:
                raise ValueError(f"row {i} has length {len(row)}, expected {n}")
        for i in range(n):
            for j in range(i + 1, n):
                if rows[i][j] != rows[j][i]:
                    raise ValueError(
                        f"matrix is not symmetric at ({i}, {j}): "
                        f"{rows[i][j]} != {rows[j][i]}"
                    )
        self.dim = n
        self._rows = rows

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        return self._rows[i][j]

    def rows(self) -> tuple:
        return self._rows

    def diagonal(self) -> list:
        return [self._rows[i][i] for i in range(self.dim)]

    def quadratic_form(self, x: Sequence) -> Fraction:
        total = _ZERO
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            row = self._rows[i]
            total += xi * sum((row[j] * xj for j, xj in enumerate(x) if xj), _ZERO)
        return total

    def __eq__(self, other):
        if not isinstance(other, SymMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        body = ", ".join("[" + ", ".join(str(v) for v in row) + "]" for row in self._rows)
        return f"SymMatrix([{body}])"


def ldl_pivots(m: SymMatrix) -> list:
    """Pivots of unpivoted symmetric elimination, stopping at the first
    non-negative one.

    Zero entries are skipped, so block-sparse Gram matrices cost far less
    than the dense n**3 bound.
    """
    n = m.dim
    a = [list(row) for row in m.rows()]
    pivots = []
    for k in range(n):
        pivot = a[k][k]
        pivots.append(pivot)
        if pivot >= 0:
            break
        row_k = a[k]
        tail = [j for j in range(k + 1, n) if row_k[j] != 0]
        for i in tail:
            factor = a[i][k] / pivot
            row_i = a[i]
            for j in tail:
                if j >= i:
                    row_i[j] -= factor * row_k[j]
            # keep the lower triangle in sync for later columns
            for j in tail:
                if j > i:
                    a[j][i] = row_i[j]
    return pivots


def is_negative_definite(m: SymMatrix) -> bool:
    """True iff ``x^T m x < 0`` for every nonzero rational ``x``.

    Decided by symmetric elimination: every pivot must be strictly negative.
    A zero pivot means the matrix is not definite.
    """
    if not isinstance(m, SymMatrix):
        m = SymMatrix(m)
    pivots = ldl_pivots(m)
    return len(pivots) == m.dim and all(p < 0 for p in pivots)
