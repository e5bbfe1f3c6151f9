"""Sparse univariate and bivariate Laurent polynomials with exact division.

Coefficients are any exact ring elements that support ``+``, ``-``, ``*`` and
comparison with ``0`` (ints, Fractions, :class:`QSqrt5`, :class:`CycloNum`).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .rational import normalize


class NotDivisible(ArithmeticError):
    """Exact division failed; ``remainder`` holds what was left over."""

    def __init__(self, message, remainder=None):
        super().__init__(message)
        self.remainder = remainder


def _div(a, b):
    if isinstance(a, int) and isinstance(b, int):
        if a % b == 0:
            return a // b
        return Fraction(a, b)
    return normalize(a / b)


def _clean(d):
    return {k: normalize(v) for k, v in d.items() if v != 0}


class UniPoly:
    """Univariate Laurent polynomial ``sum c_k q^k`` stored as ``{k: c_k}``."""

    __slots__ = ("_c",)

    def __init__(self, coeffs=None):
        if coeffs is None:
            coeffs = {}
        elif isinstance(coeffs, (list, tuple)):
            coeffs = dict(enumerate(coeffs))
        elif not isinstance(coeffs, dict):
            coeffs = {0: coeffs}
        self._c = _clean(coeffs)

    # construction -------------------------------------------------------
    @classmethod
    def q(cls) -> UniPoly:
        return cls({1: 1})

    @classmethod
    def monomial(cls, k: int, c=1) -> UniPoly:
        return cls({k: c})

    @classmethod
    def one_minus_q_pow(cls, d: int) -> UniPoly:
        """The binomial ``1 - q^d``."""
        if d == 0:
            return cls()
        return cls({0: 1, d: -1})

    # access -------------------------------------------------------------
    def items(self):
        return sorted(self._c.items())

    def coeff(self, k: int):
        return self._c.get(k, 0)

    def coeff_list(self) -> list:
        """Dense coefficients from degree 0 up (requires no negative exponents)."""
        if not self._c:
            return []
        if self.low_degree() < 0:
            raise ValueError("Laurent polynomial has negative exponents")
        return [self._c.get(k, 0) for k in range(self.degree() + 1)]

    def degree(self) -> int:
        return max(self._c) if self._c else -1

    def low_degree(self) -> int:
        return min(self._c) if self._c else 0

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self):
        return bool(self._c)

    def __len__(self):
        return len(self._c)

    # ring operations ------------------------------------------------------
    @staticmethod
    def _lift(other):
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, (BiLaurent,)):
            return None
        return UniPoly({0: other})

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out = dict(self._c)
        for k, v in o._c.items():
            out[k] = out.get(k, 0) + v
        return UniPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly({k: -v for k, v in self._c.items()})

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out: dict = {}
        for i, a in self._c.items():
            for j, b in o._c.items():
                out[i + j] = out.get(i + j, 0) + a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._c) == 1:
                ((k, v),) = self._c.items()
                return UniPoly({-k * (-n): _div(1, v) ** (-n)})
            raise ValueError("negative power of a non-monomial")
        result, base = UniPoly({0: 1}), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self._c == o._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    # division ---------------------------------------------------------------
    def __divmod__(self, other):
        o = self._lift(other)
        if o is None or o.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        shift = min(self.low_degree(), 0)
        num = self * UniPoly.monomial(-shift) if shift else self
        dshift = o.low_degree()
        den = o * UniPoly.monomial(-dshift) if dshift else o
        dd, lc = den.degree(), den.coeff(den.degree())
        rem = dict(num._c)
        quot: dict = {}
        while rem:
            top = max(rem)
            if top < dd:
                break
            factor = _div(rem[top], lc)
            quot[top - dd] = factor
            for k, v in den._c.items():
                key = k + top - dd
                rem[key] = rem.get(key, 0) - factor * v
                if rem[key] == 0:
                    del rem[key]
        q = UniPoly(quot)
        r = UniPoly(rem)
        if shift or dshift:
            q = q * UniPoly.monomial(shift - dshift)
            r = r * UniPoly.monomial(shift)
        return q, r

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    # evaluation -----------------------------------------------------------
    def __call__(self, x):
        if not self._c:
            return 0
        total = 0
        if self.low_degree() < 0:
            xinv = x ** -1
            for k, v in self._c.items():
                total = total + v * (x ** k if k >= 0 else xinv ** (-k))
            return total
        for v in reversed(self.coeff_list()):
            total = total * x + v
        return total

    def map_coeffs(self, f) -> UniPoly:
        return UniPoly({k: f(v) for k, v in self._c.items()})

    def content(self) -> int:
        g = 0
        for v in self._c.values():
            g = gcd(g, int(v))
        return g

    # display ----------------------------------------------------------------
    def to_string(self, var: str = "q") -> str:
        if not self._c:
            return "0"
        parts = []
        for k, v in self.items():
            mon = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
            if mon == "":
                parts.append(str(v))
            elif v == 1:
                parts.append(mon)
            elif v == -1:
                parts.append("-" + mon)
            else:
                parts.append(f"{v}*{mon}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"UniPoly({self.to_string()})"

    __str__ = to_string


def poly_div_exact(a: UniPoly, b: UniPoly) -> UniPoly:
    """Return ``a / b`` or raise :class:`NotDivisible` carrying the remainder."""
    q, r = divmod(a, b)
    if r:
        raise NotDivisible(f"{b} does not divide {a}", remainder=r)
    return q


class BiLaurent:
    """Bivariate Laurent polynomial in ``q1, q2`` stored as ``{(i, j): c}``."""

    __slots__ = ("_c",)

    def __init__(self, coeffs=None):
        if coeffs is None:
            coeffs = {}
        elif not isinstance(coeffs, dict):
            coeffs = {(0, 0): coeffs}
        self._c = _clean(coeffs)

    @classmethod
    def monomial(cls, i: int, j: int, c=1) -> BiLaurent:
        return cls({(i, j): c})

    @classmethod
    def binomial(cls, u: int, v: int) -> BiLaurent:
        """``1 - q1^u q2^v``."""
        if (u, v) == (0, 0):
            return cls()
        return cls({(0, 0): 1, (u, v): -1})

    @classmethod
    def from_unipoly(cls, p: UniPoly, var: int = 0) -> BiLaurent:
        return cls({((k, 0) if var == 0 else (0, k)): v for k, v in p.items()})

    def items(self):
        return sorted(self._c.items())

    def coeff(self, i: int, j: int):
        return self._c.get((i, j), 0)

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self):
        return bool(self._c)

    def __len__(self):
        return len(self._c)

    @staticmethod
    def _lift(other):
        if isinstance(other, BiLaurent):
            return other
        if isinstance(other, UniPoly):
            return None
        return BiLaurent({(0, 0): other})

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out = dict(self._c)
        for k, v in o._c.items():
            out[k] = out.get(k, 0) + v
        return BiLaurent(out)

    __radd__ = __add__

    def __neg__(self):
        return BiLaurent({k: -v for k, v in self._c.items()})

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out: dict = {}
        for (i1, j1), a in self._c.items():
            for (i2, j2), b in o._c.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, 0) + a * b
        return BiLaurent(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result, base = BiLaurent({(0, 0): 1}), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self._c == o._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def div_binomial(self, u: int, v: int) -> BiLaurent:
        """Exact quotient by ``1 - q1^u q2^v`` with ``u, v >= 0`` not both zero.

        Raises :class:`NotDivisible` when the quotient is not a polynomial.
        """
        if u < 0 or v < 0 or (u, v) == (0, 0):
            raise ValueError("binomial exponents must be nonnegative and not both zero")
        rem = dict(self._c)
        quot: dict = {}
        while rem:
            # highest total degree first, ties broken lexicographically
            e = max(rem, key=lambda k: (k[0] + k[1], k))
            c = rem.pop(e)
            low = (e[0] - u, e[1] - v)
            if low[0] < 0 or low[1] < 0:
                rem[e] = c
                raise NotDivisible(
                    f"1 - q1^{u} q2^{v} does not divide the polynomial",
                    remainder=BiLaurent(rem),
                )
            quot[low] = quot.get(low, 0) - c
            rem[low] = rem.get(low, 0) + c
            if rem[low] == 0:
                del rem[low]
        return BiLaurent(quot)

    def __call__(self, x, y):
        total = 0
        for (i, j), c in self._c.items():
            total = total + c * (x ** i) * (y ** j)
        return total

    def diagonal(self) -> UniPoly:
        """Specialize ``q1 = q2 = q``."""
        out: dict = {}
        for (i, j), c in self._c.items():
            out[i + j] = out.get(i + j, 0) + c
        return UniPoly(out)

    def swap(self) -> BiLaurent:
        return BiLaurent({(j, i): c for (i, j), c in self._c.items()})

    def mass(self):
        """Sum of coefficients, the value at ``q1 = q2 = 1``."""
        return sum(self._c.values())

    def to_string(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for (i, j), v in self.items():
            mon = "*".join(
                s for s in (
                    "" if i == 0 else ("q1" if i == 1 else f"q1^{i}"),
                    "" if j == 0 else ("q2" if j == 1 else f"q2^{j}"),
                ) if s
            )
            if not mon:
                parts.append(str(v))
            elif v == 1:
                parts.append(mon)
            elif v == -1:
                parts.append("-" + mon)
            else:
                parts.append(f"{v}*{mon}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"BiLaurent({self.to_string()})"

    __str__ = to_string
