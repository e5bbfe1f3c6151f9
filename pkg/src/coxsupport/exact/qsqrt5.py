"""The real quadratic field Q(sqrt 5), enough for the H3/H4 and I2(5) root data."""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational

from .rational import normalize


class QSqrt5:
    """Exact number ``a + b*sqrt(5)`` with rational ``a`` and ``b``.

    Instances are immutable and hashable; an element with ``b == 0`` hashes and
    compares like the plain rational ``a``.
    """

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        object.__setattr__(self, "a", normalize(Fraction(a)))
        object.__setattr__(self, "b", normalize(Fraction(b)))

    def __setattr__(self, name, value):
        raise AttributeError("QSqrt5 is immutable")

    @classmethod
    def sqrt5(cls) -> QSqrt5:
        return cls(0, 1)

    @classmethod
    def golden(cls) -> QSqrt5:
        """tau = (1 + sqrt 5)/2 = 2 cos(pi/5)."""
        return cls(Fraction(1, 2), Fraction(1, 2))

    @staticmethod
    def _coerce(other):
        if isinstance(other, QSqrt5):
            return other
        if isinstance(other, Rational) and not isinstance(other, bool):
            return QSqrt5(other, 0)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QSqrt5(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return QSqrt5(-self.a, -self.b)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QSqrt5(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QSqrt5(self.a * o.a + 5 * self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def conjugate(self) -> QSqrt5:
        """The Galois conjugate ``a - b*sqrt 5``."""
        return QSqrt5(self.a, -self.b)

    def norm(self) -> Fraction:
        return Fraction(self.a) ** 2 - 5 * Fraction(self.b) ** 2

    def inverse(self) -> QSqrt5:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in Q(sqrt 5)")
        return QSqrt5(Fraction(self.a) / n, -Fraction(self.b) / n)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result, base = QSqrt5(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def sign(self) -> int:
        """Exact sign of ``a + b sqrt 5`` as -1, 0 or 1."""
        sa = (self.a > 0) - (self.a < 0)
        sb = (self.b > 0) - (self.b < 0)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        # opposite signs: compare a^2 with 5 b^2
        diff = Fraction(self.a) ** 2 - 5 * Fraction(self.b) ** 2
        if diff == 0:
            return 0
        return sa if diff > 0 else sb

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __float__(self):
        return float(self.a) + float(self.b) * math.sqrt(5.0)

    def __repr__(self):
        return f"QSqrt5({self.a}, {self.b})"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return f"{self.b}*sqrt5"
        return f"{self.a}{'+' if self.b > 0 else '-'}{abs(self.b)}*sqrt5"
