"""Support strata of the spherical irreducible module and finite-dimensionality.

Equal parameters reduce to comparing a-counts of W and the stabilizer type.
For two parameters a stratum drops out of the support exactly when some
positive line through ``c`` carries an identically vanishing ratio
``P_W / P_Wa``; only binomial factor directions can produce such a line, so
the candidate set is finite.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import gcd

from .coxeter.parabolic import ParabolicClass, _ambient_matrix, standard_parabolics, type_of_matrix
from .coxeter.types import CoxeterLabel, CoxeterType, canonical_label
from .exact.cyclo import CycloNum, cyclo_eval
from .exact.lines import PositiveLine, restrict_to_line
from .exact.rational import parse_rational
from .poincare import FactoredBiPoincare, a_count, as_type, poincare2, poincare_ratio


def _rational(c) -> Fraction:
    if isinstance(c, float):
        raise TypeError("parameters must be exact rationals, not floats")
    return parse_rational(c)


@dataclass(frozen=True)
class Stratum:
    """A stabilizer stratum ``{a : W_a conjugate to the parabolic}`` and its flag."""

    parabolic: ParabolicClass
    in_support: bool
    note: str = ""

    @property
    def codimension(self) -> int:
        return self.parabolic.rank

    @property
    def name(self) -> str:
        return self.parabolic.class_name()


# -- equal parameters ----------------------------------------------------------


def in_support_equal(w, wa, c) -> bool:
    """Is the stratum of ``wa`` in the support of ``L_c`` (one parameter)?"""
    c = _rational(c)
    if c <= 0 or c.denominator == 1:
        return True
    m = c.denominator
    wa_t = wa.ctype if isinstance(wa, ParabolicClass) else as_type(wa)
    return a_count(w, m) == a_count(wa_t, m)


def in_support_cyclotomic(w, wa, c) -> bool:
    """Same question decided by evaluating ``P_W / P_Wa`` at ``exp(2 pi i c)`` exactly."""
    c = _rational(c)
    if c <= 0 or c.denominator == 1:
        return True
    ratio = poincare_ratio(as_type(w), _parabolic_type(wa))
    return not cyclo_eval(ratio, [CycloNum.root_of_unity(c)]).is_zero()


def support_strata(w, c) -> list[Stratum]:
    c = _rational(c)
    out = []
    for p in standard_parabolics(as_type(w)):
        out.append(Stratum(p, in_support_equal(w, p, c)))
    return out


def _finite_for_m(t: CoxeterType, m: int) -> bool:
    aw = a_count(t, m)
    return all(aw > a_count(p.ctype, m) for p in standard_parabolics(t) if p.maximal)


def is_finite_dim_equal(w, c) -> bool:
    """Finite dimensionality of ``L_c`` for a constant parameter."""
    c = _rational(c)
    t = as_type(w)
    if t.rank == 0:
        return True
    if c <= 0 or c.denominator == 1:
        return False
    return _finite_for_m(t, c.denominator)


def finite_dim_denominators(w, m_max: int | None = None) -> list[int]:
    """All ``m >= 2`` (up to ``m_max``, default the largest degree) giving finite ``L_c``."""
    t = as_type(w)
    if m_max is None:
        m_max = max(t.degrees())
    return [m for m in range(2, m_max + 1) if _finite_for_m(t, m)]


@lru_cache(maxsize=None)
def containment(t: CoxeterType) -> frozenset:
    """Pairs ``(A, B)`` of parabolic types with a standard copy of A inside one of B."""
    m, classes = _ambient_matrix(t)
    r = len(m)
    types = {}
    for k in range(r + 1):
        for nodes in combinations(range(r), k):
            types[nodes] = type_of_matrix(m, classes, nodes)
    pairs = set()
    for big, tb in types.items():
        for k in range(len(big) + 1):
            for small in combinations(big, k):
                pairs.add((types[small], tb))
    return frozenset(pairs)


def closure_violations(w, strata: list[Stratum]) -> list[tuple[str, str]]:
    """Pairs ``(A, B)`` with A in the support, A inside B, but B excluded.

    The support is closed and a union of strata; the closure of the stratum of
    A contains the strata of all larger stabilizers B, so membership must be
    inherited upwards.
    """
    pairs = containment(as_type(w))
    flag = {s.parabolic.ctype: s.in_support for s in strata}
    bad = []
    for a, b in pairs:
        if flag.get(a) and not flag.get(b, True):
            bad.append((a.class_name(), b.class_name()))
    return bad


# -- two parameters ------------------------------------------------------------

TWO_PARAMETER_FAMILIES = "I2(2m), B_n (n >= 2), F4, G2"


def check_two_parameter_type(w) -> CoxeterLabel:
    if isinstance(w, CoxeterType):
        if not w.is_irreducible:
            raise ValueError(f"two-parameter criterion needs an irreducible type, got {w.name}")
        f = w.factors[0]
        w = f.label
    lab = canonical_label(w)
    ok = lab.family in "BF" or (lab.family == "I" and lab.p % 2 == 0)
    if not ok:
        raise ValueError(f"{w.name} does not have two reflection classes; supported: {TWO_PARAMETER_FAMILIES}")
    return w


def _pair(c) -> tuple[Fraction, Fraction]:
    c1, c2 = c
    return _rational(c1), _rational(c2)


def vanish_order_on_line(f: FactoredBiPoincare, c, line: PositiveLine) -> int:
    """Net count of binomial factors vanishing identically on ``line`` at ``c``.

    A binomial ``1 - q1^u q2^v`` restricts to a nonzero constant or to zero
    exactly when ``(u, v)`` is parallel to the line normal, and to zero when
    ``u c1 + v c2`` is an integer.
    """
    c1, c2 = _pair(c)
    if not line.contains((c1, c2)):
        raise ValueError(f"point ({c1}, {c2}) is not on the line {line}")

    def hits(counts):
        total = 0
        for (u, v), mult in counts.items():
            if u * line.a2 == v * line.a1 and (u * c1 + v * c2).denominator == 1:
                total += mult
        return total

    return hits(f.numerator_counts()) - hits(f.denominator_counts())


def candidate_lines(directions, c) -> list[PositiveLine]:
    """Positive lines through ``c`` normal to a factor direction on which it vanishes."""
    c1, c2 = _pair(c)
    seen = {}
    for u, v in directions:
        if u < 0 or v < 0 or (u, v) == (0, 0):
            continue
        if (u * c1 + v * c2).denominator != 1:
            continue
        g = gcd(u, v)
        a1, a2 = u // g, v // g
        b = a1 * c1 + a2 * c2
        if b > 0:
            seen[(a1, a2)] = PositiveLine(a1, a2, b)
    return [seen[k] for k in sorted(seen)]


def _parabolic_type(wa) -> CoxeterType:
    return wa.ctype if isinstance(wa, ParabolicClass) else as_type(wa)


def support_witness_two(w, wa, c) -> PositiveLine | None:
    """A positive line through ``c`` killing ``P_W/P_Wa``, or None if in support."""
    check_two_parameter_type(w)
    ratio = poincare2(as_type(w)) / poincare2(_parabolic_type(wa))
    for line in candidate_lines(ratio.directions(), c):
        if vanish_order_on_line(ratio, c, line) > 0:
            return line
    return None


def in_support_two(w, wa, c) -> bool:
    return support_witness_two(w, wa, c) is None


def support_strata_two(w, c) -> list[Stratum]:
    check_two_parameter_type(w)
    out = []
    for p in standard_parabolics(as_type(w)):
        line = support_witness_two(w, p, c)
        out.append(Stratum(p, line is None, "" if line is None else f"vanishes on {line}"))
    return out


def is_finite_dim_two(w, c) -> bool:
    """Finite dimensionality for two parameters: every proper stratum drops out."""
    check_two_parameter_type(w)
    t = as_type(w)
    for p in standard_parabolics(t):
        if p.rank < t.rank and support_witness_two(w, p, c) is None:
            return False
    return True


# -- expanded-polynomial oracle ------------------------------------------------


@lru_cache(maxsize=None)
def _ratio_expanded(t: CoxeterType, ta: CoxeterType):
    ratio = poincare2(t) / poincare2(ta)
    return ratio, ratio.expand()


def _all_normals(poly) -> list[PositiveLine]:
    top1 = max((i for (i, _), _ in poly.items()), default=0)
    top2 = max((j for (_, j), _ in poly.items()), default=0)
    return [(a1, a2) for a1 in range(top1 + 1) for a2 in range(top2 + 1) if gcd(a1, a2) == 1]


def in_support_two_oracle(w, wa, c, exhaustive: bool = False) -> bool:
    """Same decision by restricting the expanded ratio to lines through ``c``.

    Each line is tested with an exact cyclotomic substitution of the fully
    multiplied-out polynomial instead of factor bookkeeping. By default only
    the factor directions are tried; ``exhaustive=True`` tries every primitive
    normal up to the partial degrees of the polynomial, which bounds the
    normal of any binomial factor it could have.
    """
    check_two_parameter_type(w)
    ratio, poly = _ratio_expanded(as_type(w), _parabolic_type(wa))
    c1, c2 = _pair(c)
    if exhaustive:
        lines = []
        for a1, a2 in _all_normals(poly):
            b = a1 * c1 + a2 * c2
            if b > 0:
                lines.append(PositiveLine(a1, a2, b))
    else:
        lines = candidate_lines(ratio.directions(), c)
    for line in lines:
        if restrict_to_line(poly, (c1, c2), line).is_zero():
            return False
    return True
