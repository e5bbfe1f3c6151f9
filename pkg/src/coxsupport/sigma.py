"""Closed-form sets of two-parameter values with finite-dimensional ``L_c``.

Each family is a line ``a1*c1 + a2*c2 = b`` or an isolated point, indexed
by integer parameters with congruence side conditions. ``sigma_member``
decides membership exactly and names the family that matched.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .coxeter.types import CoxeterLabel, canonical_label
from .exact.rational import format_rational, parse_rational


@dataclass(frozen=True)
class Witness:
    family: str  # e.g. "line", "point", "1", "2a"
    kind: str  # "line" or "point"
    params: dict = field(default_factory=dict)

    def describe(self) -> str:
        ps = ", ".join(f"{k}={format_rational(v)}" for k, v in self.params.items())
        return f"{self.family} ({self.kind}; {ps})"


@dataclass(frozen=True)
class SigmaDescription:
    """Human-readable families plus a membership predicate for one group."""

    label: CoxeterLabel
    lines: tuple[str, ...]
    points: tuple[str, ...]

    def member(self, c):
        return sigma_member(self.label, c)


def _is_int(x) -> bool:
    return Fraction(x).denominator == 1


def _odd_pos(x) -> bool:
    return _is_int(x) and x > 0 and int(x) % 2 == 1


def _pos_not_div(x, k: int) -> bool:
    return _is_int(x) and x > 0 and int(x) % k != 0


def _kind(label: CoxeterLabel) -> str:
    lab = canonical_label(label)
    if label.family == "I":
        if label.p % 2:
            raise ValueError(f"{label.name} has a single class of reflections")
        return "I"
    if lab.family == "B":
        return "B"
    if lab.family == "F":
        return "F"
    raise ValueError(f"no closed form for {label.name}")


def sigma_closed_form(label: CoxeterLabel) -> SigmaDescription:
    k = _kind(label)
    if k == "I":
        m = label.p // 2
        return SigmaDescription(
            label,
            (f"c1 + c2 = r/{m}, r >= 1, {m} does not divide r",),
            ("(p1/2, p2/2), p1, p2 odd positive",),
        )
    if k == "F":
        return SigmaDescription(
            label,
            ("c1 + c2 = p/4, p odd positive", "c1 + c2 = p/6, p odd positive"),
            (
                "2a: (p1/2, p2/2), p1, p2 odd positive",
                "2b: (p1/3, p2/3), p1, p2 positive, not divisible by 3",
                "2c: (p1/3, p2/4 - p1/6) and its mirror, p2 odd positive, p1 positive not divisible by 3",
                "2d: ((2p2 - p1)/6, (2p1 - p2)/6), p1, p2 odd positive, 3 does not divide p1 + p2",
            ),
        )
    n = canonical_label(label).rank
    return SigmaDescription(
        label,
        (f"{n - 1}*c1 + c2 = p/2, p odd positive (c1 on long roots)",),
        (f"(r/{n}, p/2 - r + r*s/{n}), r >= 1 not divisible by {n}, p odd positive, 2 <= s <= {n}/gcd(r, {n})",),
    )


def _dihedral(m: int, c1, c2):
    r = m * (c1 + c2)
    if _is_int(r) and r >= 1 and int(r) % m != 0:
        return Witness("1", "line", {"r": int(r)})
    p1, p2 = 2 * c1, 2 * c2
    if _odd_pos(p1) and _odd_pos(p2):
        return Witness("2", "point", {"p1": int(p1), "p2": int(p2)})
    return None


def _f4(c1, c2):
    s = c1 + c2
    if _odd_pos(4 * s):
        return Witness("1", "line", {"p": int(4 * s), "den": 4})
    if _odd_pos(6 * s):
        return Witness("1", "line", {"p": int(6 * s), "den": 6})
    if _odd_pos(2 * c1) and _odd_pos(2 * c2):
        return Witness("2a", "point", {"p1": int(2 * c1), "p2": int(2 * c2)})
    if _pos_not_div(3 * c1, 3) and _pos_not_div(3 * c2, 3):
        return Witness("2b", "point", {"p1": int(3 * c1), "p2": int(3 * c2)})
    for x, y, mirrored in ((c1, c2, False), (c2, c1, True)):
        p1 = 3 * x
        if _pos_not_div(p1, 3):
            p2 = 4 * (y + p1 / 6)
            if _odd_pos(p2):
                return Witness("2c", "point", {"p1": int(p1), "p2": int(p2), "mirrored": int(mirrored)})
    p1, p2 = 4 * c2 + 2 * c1, 4 * c1 + 2 * c2
    if _odd_pos(p1) and _odd_pos(p2) and int(p1 + p2) % 3 != 0:
        return Witness("2d", "point", {"p1": int(p1), "p2": int(p2)})
    return None


def _bn(n: int, c1, c2):
    p = 2 * ((n - 1) * c1 + c2)
    if _odd_pos(p):
        return Witness("1", "line", {"p": int(p)})
    r = n * c1
    if not (_is_int(r) and r >= 1 and int(r) % n != 0):
        return None
    r = int(r)
    for s in range(2, n // gcd(r, n) + 1):
        p = 2 * (c2 + r - Fraction(r * s, n))
        if _odd_pos(p):
            return Witness("2", "point", {"r": r, "p": int(p), "s": s})
    return None


def sigma_member(label: CoxeterLabel, c) -> tuple[bool, Witness | None]:
    """Membership of ``c = (c1, c2)`` in the closed-form set, with the matching family."""
    c1, c2 = (parse_rational(x) for x in c)
    k = _kind(label)
    if label.swapped:
        c1, c2 = c2, c1
    if k == "I":
        w = _dihedral(label.p // 2, c1, c2)
    elif k == "F":
        w = _f4(c1, c2)
    else:
        w = _bn(canonical_label(label).rank, c1, c2)
    return w is not None, w


def sigma_in_box(label: CoxeterLabel, lo, hi):
    """Line families and isolated points meeting the square ``[lo, hi]^2``.

    Lines come back as ``(a1, a2, b, witness)``; points as ``(c1, c2, witness)``.
    Only finitely many parameters can reach a bounded box, so this terminates.
    """
    lo, hi = Fraction(lo), Fraction(hi)
    k = _kind(label)
    lines, points = [], []

    def add_line(a1, a2, b, w):
        # a1*c1 + a2*c2 over the box ranges over [(a1+a2)lo, (a1+a2)hi]
        if (a1 + a2) * lo <= b <= (a1 + a2) * hi:
            lines.append((a1, a2, b, w))

    def add_point(x, y, w):
        if lo <= x <= hi and lo <= y <= hi:
            points.append((x, y, w))

    top = 2 * max(abs(lo), abs(hi)) + 1
    if k == "I":
        m = label.p // 2
        for r in range(1, int(2 * m * top) + 2):
            if r % m:
                add_line(1, 1, Fraction(r, m), Witness("1", "line", {"r": r}))
        for p1 in range(1, int(2 * top) + 2, 2):
            for p2 in range(1, int(2 * top) + 2, 2):
                add_point(Fraction(p1, 2), Fraction(p2, 2), Witness("2", "point", {"p1": p1, "p2": p2}))
    elif k == "F":
        for den in (4, 6):
            for p in range(1, int(2 * den * top) + 2, 2):
                add_line(1, 1, Fraction(p, den), Witness("1", "line", {"p": p, "den": den}))
        span = int(12 * top) + 2
        for p1 in range(1, span):
            for p2 in range(1, span):
                if p1 % 2 and p2 % 2:
                    add_point(Fraction(p1, 2), Fraction(p2, 2), Witness("2a", "point", {"p1": p1, "p2": p2}))
                    if (p1 + p2) % 3:
                        add_point(Fraction(2 * p2 - p1, 6), Fraction(2 * p1 - p2, 6),
                                  Witness("2d", "point", {"p1": p1, "p2": p2}))
                if p1 % 3 and p2 % 3:
                    add_point(Fraction(p1, 3), Fraction(p2, 3), Witness("2b", "point", {"p1": p1, "p2": p2}))
                if p1 % 3 and p2 % 2:
                    x, y = Fraction(p1, 3), Fraction(p2, 4) - Fraction(p1, 6)
                    add_point(x, y, Witness("2c", "point", {"p1": p1, "p2": p2, "mirrored": 0}))
                    add_point(y, x, Witness("2c", "point", {"p1": p1, "p2": p2, "mirrored": 1}))
    else:
        n = canonical_label(label).rank
        for p in range(1, int(2 * n * top) + 2, 2):
            add_line(n - 1, 1, Fraction(p, 2), Witness("1", "line", {"p": p}))
        for r in range(1, int(n * top) + 2):
            if r % n == 0:
                continue
            for s in range(2, n // gcd(r, n) + 1):
                for p in range(1, int(2 * (top + r + r * s)) + 2, 2):
                    x = Fraction(r, n)
                    y = Fraction(p, 2) - r + Fraction(r * s, n)
                    add_point(x, y, Witness("2", "point", {"r": r, "p": p, "s": s}))
    if label.swapped:
        lines = [(a2, a1, b, w) for a1, a2, b, w in lines]
        points = [(y, x, w) for x, y, w in points]
    seen = set()
    uniq = []
    for pt in points:
        if (pt[0], pt[1]) not in seen:
            seen.add((pt[0], pt[1]))
            uniq.append(pt)
    return lines, uniq
