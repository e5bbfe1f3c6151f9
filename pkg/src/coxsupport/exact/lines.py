"""Lines in the (c1, c2) parameter plane and restriction of ``Q(e^{2 pi i z})`` to them."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .cyclo import CycloNum
from .poly import BiLaurent, UniPoly
from .rational import format_rational


@dataclass(frozen=True)
class PositiveLine:
    """The line ``a1*z1 + a2*z2 = b`` with ``a1, a2 >= 0`` coprime and ``b > 0``."""

    a1: int
    a2: int
    b: Fraction

    def __post_init__(self):
        if self.a1 < 0 or self.a2 < 0 or (self.a1, self.a2) == (0, 0):
            raise ValueError("line normal must be nonnegative and nonzero")
        if gcd(self.a1, self.a2) != 1:
            raise ValueError("line normal must be primitive (gcd 1)")
        object.__setattr__(self, "b", Fraction(self.b))
        if self.b <= 0:
            raise ValueError("a positive line needs b > 0")

    @classmethod
    def through(cls, direction: tuple[int, int], c) -> PositiveLine:
        """Line with normal ``direction`` (made primitive) passing through ``c``."""
        u, v = direction
        g = gcd(u, v)
        a1, a2 = u // g, v // g
        return cls(a1, a2, a1 * Fraction(c[0]) + a2 * Fraction(c[1]))

    def contains(self, c) -> bool:
        return self.a1 * Fraction(c[0]) + self.a2 * Fraction(c[1]) == self.b

    def __str__(self):
        lhs = []
        for a, z in ((self.a1, "c1"), (self.a2, "c2")):
            if a:
                lhs.append(z if a == 1 else f"{a}*{z}")
        return f"{' + '.join(lhs)} = {format_rational(self.b)}"


def restrict_to_line(q: BiLaurent, c, line: PositiveLine) -> UniPoly:
    """Substitute ``q1 -> zeta1 u^a2``, ``q2 -> zeta2 u^-a1`` with ``zeta_j = e^{2 pi i c_j}``.

    The result is a Laurent polynomial in ``u`` with cyclotomic coefficients;
    it is identically zero exactly when ``Q(e^{2 pi i z})`` vanishes on the
    whole line.
    """
    c1, c2 = Fraction(c[0]), Fraction(c[1])
    if not line.contains((c1, c2)):
        raise ValueError(f"point ({c1}, {c2}) is not on the line {line}")
    n = c1.denominator * c2.denominator // gcd(c1.denominator, c2.denominator)
    e1, e2 = int(c1 * n), int(c2 * n)
    # zeta1^i zeta2^j = zeta_n^(i*e1 + j*e2): gather per u-power, reduce once
    dense: dict = {}
    for (i, j), coeff in q.items():
        k = i * line.a2 - j * line.a1
        row = dense.setdefault(k, [0] * n)
        row[(i * e1 + j * e2) % n] += coeff
    return UniPoly({k: CycloNum(n, row) for k, row in dense.items()})
