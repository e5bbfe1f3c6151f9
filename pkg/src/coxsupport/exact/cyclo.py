"""Exact arithmetic in cyclotomic fields Q(zeta_N).

An element is a coefficient vector of length phi(N) in the power basis
``1, zeta, ..., zeta^(phi(N)-1)``, reduced modulo the cyclotomic polynomial
Phi_N. Reduction modulo Phi_N (rather than x^N - 1) makes the representation
canonical, so equality and the zero test are plain coefficient comparisons.
Operands with different conductors are lifted to the lcm on demand.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational

from .qsqrt5 import QSqrt5
from .rational import normalize


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def _poly_divexact_int(num: list[int], den: list[int]) -> list[int]:
    # both low-to-high, den monic up to sign
    num = list(num)
    dd = len(den) - 1
    lc = den[-1]
    out = [0] * (len(num) - dd)
    for top in range(len(num) - 1, dd - 1, -1):
        f = num[top] // lc
        out[top - dd] = f
        if f:
            for k, v in enumerate(den):
                num[top - dd + k] -= f * v
    assert not any(num), "cyclotomic division was not exact"
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients (low to high) of the n-th cyclotomic polynomial."""
    if n < 1:
        raise ValueError("cyclotomic index must be positive")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_divexact_int(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


def euler_phi(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[int, ...], ...]:
    """Row k holds x^k mod Phi_n for phi(n) <= k < n."""
    phi_poly = cyclotomic_polynomial(n)
    f = len(phi_poly) - 1
    rows = []
    cur = [0] * f
    # x^f = -(phi_poly[0] + ... + phi_poly[f-1] x^(f-1))
    for k in range(f, n):
        if k == f:
            cur = [-c for c in phi_poly[:f]]
        else:
            lead = cur[-1]
            cur = [0] + cur[:-1]
            if lead:
                for i in range(f):
                    cur[i] -= lead * phi_poly[i]
        rows.append(tuple(cur))
    return tuple(rows)


def _reduce(dense: list, n: int) -> tuple:
    """Reduce a dense coefficient list (any length) into Q[x]/Phi_n."""
    f = euler_phi(n)
    folded = [0] * n
    for i, c in enumerate(dense):
        if c:
            folded[i % n] += c
    out = folded[:f]
    if n > f:
        table = _power_table(n)
        for k in range(f, n):
            c = folded[k]
            if c:
                row = table[k - f]
                for i in range(f):
                    if row[i]:
                        out[i] += c * row[i]
    return tuple(normalize(c) for c in out)


class CycloNum:
    """Element of Q(zeta_N), zeta_N = exp(2 pi i / N)."""

    __slots__ = ("n", "coeffs")
    __hash__ = None  # equality lifts across conductors, so no stable hash

    def __init__(self, n: int, coeffs):
        if n < 1:
            raise ValueError("conductor must be positive")
        coeffs = list(coeffs)
        if len(coeffs) == euler_phi(n) and all(isinstance(c, (int, Fraction)) for c in coeffs):
            self.coeffs = tuple(normalize(c) for c in coeffs)
        else:
            self.coeffs = _reduce(coeffs, n)
        self.n = n

    # constructors -------------------------------------------------------------
    @classmethod
    def rational(cls, q) -> CycloNum:
        return cls(1, [Fraction(q)])

    @classmethod
    def zeta(cls, n: int, k: int = 1) -> CycloNum:
        """``zeta_n ** k``."""
        dense = [0] * n
        dense[k % n] = 1
        return cls(n, dense)

    @classmethod
    def root_of_unity(cls, q) -> CycloNum:
        """``exp(2 pi i q)`` for a rational ``q``."""
        q = Fraction(q)
        return cls.zeta(q.denominator, q.numerator)

    @classmethod
    def from_qsqrt5(cls, x: QSqrt5) -> CycloNum:
        # sqrt 5 = 1 + 2 (zeta_5 + zeta_5^4)
        return cls(5, [x.a + x.b, 2 * x.b, 0, 0, 2 * x.b])

    @classmethod
    def coerce(cls, x) -> CycloNum:
        if isinstance(x, CycloNum):
            return x
        if isinstance(x, QSqrt5):
            return cls.from_qsqrt5(x)
        if isinstance(x, Rational) and not isinstance(x, bool):
            return cls.rational(x)
        raise TypeError(f"cannot embed {x!r} in a cyclotomic field")

    # conductor handling ---------------------------------------------------------
    def lift(self, n: int) -> CycloNum:
        if n == self.n:
            return self
        if n % self.n:
            raise ValueError(f"cannot lift conductor {self.n} to {n}")
        step = n // self.n
        dense = [0] * n
        for j, c in enumerate(self.coeffs):
            if c:
                dense[(j * step) % n] += c
        return CycloNum(n, dense)

    def _pair(self, other):
        if isinstance(other, CycloNum):
            o = other
        elif isinstance(other, (QSqrt5,)) or (isinstance(other, Rational) and not isinstance(other, bool)):
            o = CycloNum.coerce(other)
        else:
            return None, None
        n = _lcm(self.n, o.n)
        return self.lift(n), o.lift(n)

    # arithmetic -------------------------------------------------------------
    def __add__(self, other):
        if isinstance(other, Rational) and not isinstance(other, bool):
            c = list(self.coeffs)
            c[0] = c[0] + other
            return CycloNum(self.n, c)
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return CycloNum(a.n, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycloNum(self.n, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Rational) and not isinstance(other, bool):
            return CycloNum(self.n, [c * other for c in self.coeffs])
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        f = len(a.coeffs)
        dense = [0] * (2 * f - 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        dense[i + j] += x * y
        return CycloNum(a.n, _reduce(dense, a.n))

    __rmul__ = __mul__

    def inverse(self) -> CycloNum:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        f = len(self.coeffs)
        # columns: self * zeta^j
        cols = []
        for j in range(f):
            dense = [0] * (j + f)
            for i, c in enumerate(self.coeffs):
                dense[i + j] = c
            cols.append(_reduce(dense, self.n))
        rows = [[Fraction(cols[j][i]) for j in range(f)] + [Fraction(int(i == 0))] for i in range(f)]
        for col in range(f):
            piv = next(r for r in range(col, f) if rows[r][col] != 0)
            rows[col], rows[piv] = rows[piv], rows[col]
            p = rows[col][col]
            rows[col] = [v / p for v in rows[col]]
            for r in range(f):
                if r != col and rows[r][col] != 0:
                    k = rows[r][col]
                    rows[r] = [v - k * w for v, w in zip(rows[r], rows[col])]
        return CycloNum(self.n, [rows[i][f] for i in range(f)])

    def __truediv__(self, other):
        if isinstance(other, Rational) and not isinstance(other, bool):
            return CycloNum(self.n, [Fraction(c) / other for c in self.coeffs])
        o = CycloNum.coerce(other)
        return self * o.inverse()

    def __rtruediv__(self, other):
        return CycloNum.coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = CycloNum(self.n, [1])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> CycloNum:
        """Complex conjugation, zeta -> zeta^-1."""
        dense = [0] * self.n
        for j, c in enumerate(self.coeffs):
            if c:
                dense[(-j) % self.n] += c
        return CycloNum(self.n, dense)

    # predicates ---------------------------------------------------------------
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, Rational) and not isinstance(other, bool):
            return self.coeffs[0] == other and not any(self.coeffs[1:])
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return a.coeffs == b.coeffs

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def __complex__(self):
        z = cmath.exp(2j * cmath.pi / self.n)
        return sum(float(c) * z ** j for j, c in enumerate(self.coeffs))

    def __repr__(self):
        return f"CycloNum({self.n}, {list(self.coeffs)})"

    def __str__(self):
        terms = []
        for j, c in enumerate(self.coeffs):
            if c:
                terms.append(str(c) if j == 0 else f"{c}*z{self.n}^{j}")
        return " + ".join(terms) if terms else "0"


def cyclo_eval(p, args) -> CycloNum:
    """Evaluate a UniPoly or BiLaurent at cyclotomic (or rational) arguments."""
    args = [CycloNum.coerce(a) for a in args]
    n = 1
    for a in args:
        n = _lcm(n, a.n)
    args = [a.lift(n) for a in args]
    value = p(*args)
    return CycloNum.coerce(value).lift(n) if not isinstance(value, CycloNum) else value
