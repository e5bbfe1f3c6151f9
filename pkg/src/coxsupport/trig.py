"""Torus points, their stabilizers and the trigonometric support criterion.

A torus point is ``a = exp(2 pi i x)`` for a rational vector ``x``. For
B_n and D_n (and A1) ``x`` is written in the orthonormal e-basis; for every
other Weyl type in the basis dual to the simple roots (fundamental
coweights), so ``alpha_i(x) = x_i``. The stabilizer of ``a`` is generated
by the reflections in roots with ``alpha(x)`` an integer.

Candidate stabilizer types come from proper subsets of the extended Dynkin
diagram: a point on a face of the fundamental alcove is fixed exactly by
the walls containing it, so each subset gives one type and a witness point
(the barycenter of the opposite vertices).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .coxeter.parabolic import identify_subsystem
from .coxeter.roots import RootSystemData, positive_roots
from .coxeter.types import CoxeterLabel, CoxeterType
from .exact.linalg import inverse
from .exact.rational import format_rational, parse_rational
from .poincare import a_count


class ScopeError(ValueError):
    """Input outside the hypotheses the criterion is stated for."""


def _weyl_data(label: CoxeterLabel) -> RootSystemData:
    if not label.crystallographic:
        raise ScopeError(f"{label.name} is not a Weyl group; torus points need a crystallographic type")
    return positive_roots(label)


def uses_e_basis(label: CoxeterLabel) -> bool:
    return positive_roots(label).ambient is not None


@dataclass(frozen=True)
class TorusPoint:
    """``a = exp(2 pi i x)``; ``x`` in e-basis or coweight coordinates (see module doc)."""

    label: CoxeterLabel
    x: tuple[Fraction, ...]

    @classmethod
    def of(cls, label: CoxeterLabel, coords) -> TorusPoint:
        return cls(label, tuple(parse_rational(v) for v in coords))

    def root_value(self, k: int) -> Fraction:
        """``alpha_k(x)`` for positive root ``k``."""
        data = positive_roots(self.label)
        vec = data.ambient_vector(k) if data.ambient is not None else data.roots[k]
        return sum((Fraction(a) * b for a, b in zip(vec, self.x)), Fraction(0))

    def reduced(self) -> tuple[Fraction, ...]:
        return tuple(v - (v.numerator // v.denominator) for v in self.x)

    def torus_coords(self) -> list[str]:
        """Each ``exp(2 pi i x_j)`` written as ``1``, ``-1`` or ``e(p/q)``."""
        out = []
        for v in self.reduced():
            if v == 0:
                out.append("1")
            elif v == Fraction(1, 2):
                out.append("-1")
            else:
                out.append(f"e({format_rational(v)})")
        return out

    def __str__(self):
        return "(" + ", ".join(format_rational(v) for v in self.x) + ")"


def stabilizer_subsystem(label: CoxeterLabel, point) -> tuple[list[int], CoxeterType]:
    """Positive roots integral at ``x`` and the class-labelled type they generate."""
    _weyl_data(label)
    if not isinstance(point, TorusPoint):
        point = TorusPoint.of(label, point)
    data = positive_roots(label)
    if len(point.x) != (len(data.ambient[0]) if data.ambient is not None else data.rank):
        raise ValueError(f"torus point for {label.name} needs {data.rank} coordinates")
    roots = [k for k in range(data.n_pos) if point.root_value(k).denominator == 1]
    ctype, _ = identify_subsystem(data, roots)
    return roots, ctype


def in_trig_support(label: CoxeterLabel, point, c) -> bool:
    """``a_W(m) == a_{W_a}(m)`` with ``m`` the denominator of ``c > 0``."""
    c = parse_rational(c)
    if c <= 0:
        raise ScopeError("the trigonometric criterion is stated for positive rational c only")
    _, wa = stabilizer_subsystem(label, point)
    m = c.denominator
    return a_count(label, m) == a_count(wa, m)


def _highest_root(data: RootSystemData) -> int:
    return max(range(data.n_pos), key=lambda k: sum(int(v) for v in data.roots[k]))


def _to_point_coords(data: RootSystemData, coweight):
    if data.ambient is None:
        return tuple(coweight)
    a = [[Fraction(v) for v in row] for row in data.ambient]
    inv = inverse(a)
    # ambient rows are simple roots: a @ x = coweight
    return tuple(sum(Fraction(inv[i][j]) * coweight[j] for j in range(len(coweight))) for i in range(len(inv)))


@dataclass(frozen=True)
class TrigStratum:
    ctype: CoxeterType
    witness: TorusPoint
    in_support: bool
    walls: tuple[int, ...]  # extended-diagram nodes (0 = affine node) fixing the witness


def extended_diagram_witnesses(label: CoxeterLabel) -> list[tuple[tuple[int, ...], TorusPoint]]:
    """One witness per proper subset of extended-diagram nodes (0 is the affine node)."""
    data = _weyl_data(label)
    r = data.rank
    theta = data.roots[_highest_root(data)]
    marks = [int(v) for v in theta]
    vertices = {0: [Fraction(0)] * r}
    for i in range(r):
        v = [Fraction(0)] * r
        v[i] = Fraction(1, marks[i])
        vertices[i + 1] = v
    out = []
    nodes = list(range(r + 1))
    for k in range(r + 1):
        for walls in combinations(nodes, k):
            rest = [n for n in nodes if n not in walls]
            bary = [sum(vertices[n][i] for n in rest) / len(rest) for i in range(r)]
            out.append((walls, TorusPoint(label, _to_point_coords(data, bary))))
    return out


def trig_support_strata(label: CoxeterLabel, c, max_rank: int = 4) -> list[TrigStratum]:
    """Stabilizer types of torus points with witnesses and support flags."""
    if label.rank > max_rank:
        raise ScopeError(f"rank {label.rank} exceeds the enumeration budget (rank <= {max_rank})")
    c = parse_rational(c)
    if c <= 0:
        raise ScopeError("the trigonometric criterion is stated for positive rational c only")
    seen: dict[CoxeterType, TrigStratum] = {}
    m = c.denominator
    aw = a_count(label, m)
    # faces away from the affine wall first, so parabolic types get witnesses near 0
    for walls, point in sorted(extended_diagram_witnesses(label), key=lambda wp: 0 in wp[0]):
        _, ctype = stabilizer_subsystem(label, point)
        if ctype not in seen:
            seen[ctype] = TrigStratum(ctype, point, aw == a_count(ctype, m), walls)
    return sorted(seen.values(), key=lambda s: (-s.ctype.rank, s.ctype.class_name()))
