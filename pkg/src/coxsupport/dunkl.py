"""Dunkl operators on polynomials and the forms built from them.

Polynomials live on the reflection representation in coordinates ``x_i``
that form a basis of the dual space: the orthonormal e-basis for A1, B_n,
D_n and I2(4), the simple roots otherwise. ``T_j`` is the Dunkl operator in
the direction dual to ``x_j``; the pairing ``(alpha, a) / alpha(x)`` in its
reflection term is invariant under rescaling ``alpha``, so roots need not
be normalized.

``beta(P, Q) = (P(y) Q)(0)`` where ``y`` maps ``x_i`` to the Dunkl operator
in the direction metrically dual to ``x_i``. The parameter may be a
rational, a pair of rationals (one per reflection class) or a UniPoly in
``c`` for symbolic work.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Iterable

import numpy as np
from scipy import integrate

from .coxeter.roots import positive_roots
from .coxeter.types import CoxeterLabel
from .exact.linalg import solve_rank_field
from .exact.poly import UniPoly
from .exact.qsqrt5 import QSqrt5
from .exact.rational import parse_rational

SYMBOLIC_C = UniPoly.q()


class BudgetError(ValueError):
    """Request too large for the exact Gram computation."""


def _div(a, b):
    if isinstance(b, int) or isinstance(b, Fraction):
        if isinstance(a, (int, Fraction)):
            return Fraction(a) / b
        return a * Fraction(1, 1) / b if not isinstance(a, UniPoly) else a * (Fraction(1) / b)
    return a / b


def _clean(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


def _zero(x) -> bool:
    return x == 0


# -- polynomials -----------------------------------------------------------------


class GradedPoly:
    """Sparse polynomial ``{exponent tuple: coefficient}`` in ``nvars`` variables."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict | None = None):
        self.nvars = nvars
        self.terms = {e: _clean(c) for e, c in (terms or {}).items() if not _zero(c)}

    @classmethod
    def constant(cls, nvars: int, c=1) -> GradedPoly:
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars: int, i: int) -> GradedPoly:
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): 1})

    @classmethod
    def monomial(cls, exps) -> GradedPoly:
        return cls(len(exps), {tuple(exps): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def piece(self, d: int) -> GradedPoly:
        return GradedPoly(self.nvars, {e: c for e, c in self.terms.items() if sum(e) == d})

    def constant_term(self):
        return self.terms.get((0,) * self.nvars, 0)

    def __add__(self, other: GradedPoly) -> GradedPoly:
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out[e] + c if e in out else c
        return GradedPoly(self.nvars, out)

    def __sub__(self, other: GradedPoly) -> GradedPoly:
        return self + other.scale(-1)

    def scale(self, s) -> GradedPoly:
        if _zero(s):
            return GradedPoly(self.nvars)
        return GradedPoly(self.nvars, {e: c * s for e, c in self.terms.items()})

    def mul_var(self, i: int) -> GradedPoly:
        out = {}
        for e, c in self.terms.items():
            f = list(e)
            f[i] += 1
            out[tuple(f)] = c
        return GradedPoly(self.nvars, out)

    def __mul__(self, other: GradedPoly) -> GradedPoly:
        out: dict = {}
        for e, a in self.terms.items():
            for f, b in other.terms.items():
                g = tuple(x + y for x, y in zip(e, f))
                out[g] = out[g] + a * b if g in out else a * b
        return GradedPoly(self.nvars, out)

    def derivative(self, i: int) -> GradedPoly:
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                f = list(e)
                f[i] -= 1
                out[tuple(f)] = c * e[i]
        return GradedPoly(self.nvars, out)

    def __eq__(self, other):
        if not isinstance(other, GradedPoly):
            return NotImplemented
        return (self - other).is_zero()

    def __repr__(self):
        return f"GradedPoly({self.nvars}, {self.terms})"


def monomials(nvars: int, d: int) -> list[tuple[int, ...]]:
    """Exponent vectors of total degree ``d`` in a fixed order."""
    out = []
    for combo in combinations_with_replacement(range(nvars), d):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return out


def _linear_power(form, k: int, nvars: int) -> GradedPoly:
    lin = GradedPoly(nvars, {tuple(int(i == j) for j in range(nvars)): a for i, a in enumerate(form)})
    out = GradedPoly.constant(nvars)
    for _ in range(k):
        out = out * lin
    return out


def divide_linear(p: GradedPoly, form) -> GradedPoly:
    """Exact quotient ``p / (sum form_i x_i)``; raises if it does not divide."""
    n = p.nvars
    k = max(i for i, a in enumerate(form) if not _zero(a))
    lead = form[k]
    rem = dict(p.terms)
    quot: dict = {}
    while True:
        cand = [e for e in rem if e[k] > 0]
        if not cand:
            break
        e = max(cand, key=lambda t: (t[k], t))
        q = _div(rem[e], lead)
        f = list(e)
        f[k] -= 1
        f = tuple(f)
        quot[f] = quot[f] + q if f in quot else q
        for i, a in enumerate(form):
            if _zero(a):
                continue
            g = list(f)
            g[i] += 1
            g = tuple(g)
            v = rem.get(g, 0) - q * a
            if _zero(v):
                rem.pop(g, None)
            else:
                rem[g] = v
    if any(not _zero(c) for c in rem.values()):
        raise ArithmeticError("polynomial is not divisible by the linear form")
    return GradedPoly(n, quot)


# -- realization -----------------------------------------------------------------


@dataclass
class Realization:
    label: CoxeterLabel
    nvars: int
    gram: list  # inner products of the coordinate functions x_i
    roots: list  # positive roots as coefficient vectors in the x_i
    classes: list
    kappa: list  # kappa[s][i] = 2 (x_i, alpha_s) / (alpha_s, alpha_s)
    _refl_cache: dict = field(default_factory=dict, repr=False)
    _div_cache: dict = field(default_factory=dict, repr=False)

    @property
    def n_reflections(self) -> int:
        return len(self.roots)

    def inner(self, u, v):
        n = self.nvars
        return sum(u[i] * self.gram[i][j] * v[j] for i in range(n) for j in range(n)
                   if not _zero(u[i]) and not _zero(v[j]))

    def reflect_monomial(self, s: int, e) -> GradedPoly:
        key = (s, e)
        hit = self._refl_cache.get(key)
        if hit is not None:
            return hit
        n = self.nvars
        alpha = self.roots[s]
        out = GradedPoly.constant(n)
        for i, k in enumerate(e):
            if not k:
                continue
            # s(x_i) = x_i - kappa_i alpha
            form = [(-self.kappa[s][i] * a) for a in alpha]
            form[i] = form[i] + 1
            out = out * _linear_power(form, k, n)
        self._refl_cache[key] = out
        return out

    def reflect(self, s: int, p: GradedPoly) -> GradedPoly:
        out = GradedPoly(self.nvars)
        for e, c in p.terms.items():
            out = out + self.reflect_monomial(s, e).scale(c)
        return out

    def difference_monomial(self, s: int, e) -> GradedPoly:
        """``(m - s m) / alpha_s`` for the monomial ``m = x^e``."""
        key = (s, e)
        hit = self._div_cache.get(key)
        if hit is not None:
            return hit
        m = GradedPoly.monomial(e)
        out = divide_linear(m - self.reflect_monomial(s, e), self.roots[s])
        self._div_cache[key] = out
        return out


def _coords(label: CoxeterLabel):
    data = positive_roots(label)
    if data.ambient is not None:
        n = len(data.ambient[0])
        gram = [[int(i == j) for j in range(n)] for i in range(n)]
        roots = [list(data.ambient_vector(k)) for k in range(data.n_pos)]
    else:
        n = data.rank
        gram = data.gram
        roots = [list(v) for v in data.roots]
    return data, n, gram, roots


@lru_cache(maxsize=None)
def realization(label: CoxeterLabel) -> Realization:
    data, n, gram, roots = _coords(label)
    real = Realization(label, n, gram, roots, list(data.classes), [])
    kappa = []
    for alpha in roots:
        aa = real.inner(alpha, alpha)
        row = []
        for i in range(n):
            unit = [int(i == j) for j in range(n)]
            row.append(_clean(_div(2 * real.inner(unit, alpha), aa)))
        kappa.append(row)
    real.kappa = kappa
    return real


def _as_label(w) -> CoxeterLabel:
    if isinstance(w, CoxeterLabel):
        return w
    from .coxeter.types import parse_label

    return parse_label(str(w))


def _param(c):
    if isinstance(c, UniPoly):
        return c
    if isinstance(c, float):
        raise TypeError("parameters must be exact rationals, not floats")
    return parse_rational(c)


def class_parameters(label: CoxeterLabel, c) -> dict[int, object]:
    """Map reflection class id to its parameter."""
    if isinstance(c, (tuple, list)):
        if label.num_classes() != 2:
            raise ValueError(f"{label.name} has one reflection class; give a single parameter")
        return {1: _param(c[0]), 2: _param(c[1])}
    v = _param(c)
    return {1: v, 2: v}


# -- Dunkl operators ---------------------------------------------------------------


class DunklOperators:
    """``T_j`` for each coordinate direction at a fixed parameter."""

    def __init__(self, w, c):
        self.label = _as_label(w)
        self.real = realization(self.label)
        cp = class_parameters(self.label, c)
        self.cs = [cp[k] for k in self.real.classes]
        self._cache: dict = {}

    @property
    def nvars(self) -> int:
        return self.real.nvars

    def apply_monomial(self, j: int, e) -> GradedPoly:
        key = (j, e)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        real = self.real
        out = GradedPoly.monomial(e).derivative(j)
        for s, alpha in enumerate(real.roots):
            coef = alpha[j]
            if _zero(coef) or _zero(self.cs[s]):
                continue
            out = out - real.difference_monomial(s, e).scale(self.cs[s] * coef)
        self._cache[key] = out
        return out

    def apply(self, j: int, p: GradedPoly) -> GradedPoly:
        out = GradedPoly(p.nvars)
        for e, c in p.terms.items():
            out = out + self.apply_monomial(j, e).scale(c)
        return out

    def apply_y(self, i: int, p: GradedPoly) -> GradedPoly:
        """Dunkl operator in the direction metrically dual to ``x_i``."""
        out = GradedPoly(p.nvars)
        g = self.real.gram
        for j in range(self.nvars):
            if not _zero(g[i][j]):
                out = out + self.apply(j, p).scale(g[i][j])
        return out


def dunkl_apply(w, c, a, p: GradedPoly) -> GradedPoly:
    """``T_a p`` for ``a`` a coordinate index or a coefficient vector over the dual basis."""
    ops = DunklOperators(w, c)
    if isinstance(a, int):
        return ops.apply(a, p)
    out = GradedPoly(p.nvars)
    for j, coef in enumerate(a):
        if not _zero(coef):
            out = out + ops.apply(j, p).scale(coef)
    return out


@dataclass
class RelationCheck:
    ok: bool
    violation: tuple | None = None  # (kind, i, j, monomial)

    def __bool__(self):
        return self.ok


def check_relations(w, c, dmax: int = 6) -> RelationCheck:
    """Verify ``[T_j, x_i] = delta_ij - sum c_s <alpha_s, e_j> kappa_s,i s`` and ``[T_i, T_j] = 0``.

    Checked on every monomial of degree at most ``dmax``.
    """
    ops = DunklOperators(w, c)
    real = ops.real
    n = real.nvars
    for d in range(dmax + 1):
        for e in monomials(n, d):
            m = GradedPoly.monomial(e)
            tm = [ops.apply(j, m) for j in range(n)]
            for j in range(n):
                for i in range(n):
                    lhs = ops.apply(j, m.mul_var(i)) - tm[j].mul_var(i)
                    rhs = m if i == j else GradedPoly(n)
                    for s, alpha in enumerate(real.roots):
                        k = alpha[j] * real.kappa[s][i]
                        if not _zero(k) and not _zero(ops.cs[s]):
                            rhs = rhs - real.reflect(s, m).scale(ops.cs[s] * k)
                    if not (lhs - rhs).is_zero():
                        return RelationCheck(False, ("[T,x]", j, i, e))
            for i in range(n):
                for j in range(i + 1, n):
                    if not (ops.apply(i, tm[j]) - ops.apply(j, tm[i])).is_zero():
                        return RelationCheck(False, ("[T,T]", i, j, e))
    return RelationCheck(True)


# -- contravariant and Gaussian forms --------------------------------------------


def _budget(label: CoxeterLabel, dmax: int):
    if not (label.rank <= 3 or label.family == "I"):
        raise BudgetError(f"Gram computations are limited to rank <= 3 or dihedral groups, not {label.name}")
    if dmax > 12:
        raise BudgetError("dmax above 12 is outside the Gram budget")


def _y_power(ops: DunklOperators, e, q: GradedPoly, memo: dict) -> GradedPoly:
    if e in memo:
        return memo[e]
    i = next(k for k, v in enumerate(e) if v)
    f = list(e)
    f[i] -= 1
    out = ops.apply_y(i, _y_power(ops, tuple(f), q, memo))
    memo[e] = out
    return out


def beta_pair(ops: DunklOperators, p: GradedPoly, q: GradedPoly):
    """``(p(y) q)(0)``."""
    memo = {(0,) * ops.nvars: q}
    total = 0
    for e, coef in p.terms.items():
        total = total + coef * _y_power(ops, e, q, memo).constant_term()
    return _clean(total)


@dataclass
class GramTable:
    degrees: dict  # d -> (monomials, matrix)
    ranks: dict

    def rank(self, d: int) -> int:
        return self.ranks[d]

    def corank(self, d: int) -> int:
        return len(self.degrees[d][0]) - self.ranks[d]


def _rank(mat) -> int:
    if any(isinstance(x, UniPoly) for row in mat for x in row):
        from .exact.linalg import rank as ff_rank

        return ff_rank(mat)
    return solve_rank_field(mat)


def beta_gram(w, c, dmax: int) -> GramTable:
    """Gram matrices of ``beta_c`` on monomials of each degree up to ``dmax``."""
    label = _as_label(w)
    _budget(label, dmax)
    if isinstance(c, UniPoly) and (label.rank > 2 or dmax > 6):
        raise BudgetError("symbolic parameters are limited to rank <= 2 and degree <= 6")
    ops = DunklOperators(label, c)
    n = ops.nvars
    degrees, ranks = {}, {}
    for d in range(dmax + 1):
        mons = monomials(n, d)
        cols = []
        for f in mons:
            memo = {(0,) * n: GradedPoly.monomial(f)}
            cols.append([_clean(_y_power(ops, e, memo[(0,) * n], memo).constant_term()) for e in mons])
        mat = [[cols[j][i] for j in range(len(mons))] for i in range(len(mons))]
        degrees[d] = (mons, mat)
        ranks[d] = _rank(mat) if mons else 0
    return GramTable(degrees, ranks)


@dataclass
class QuotientMeasure:
    finite: bool
    dim: int  # exact when finite, a lower bound otherwise
    ranks: list
    window: int

    def describe(self) -> str:
        if self.finite:
            return f"finite, dim {self.dim}"
        return f"dim >= {self.dim}, unresolved up to degree {len(self.ranks) - 1}"


def measure_quotient(w, c, dmax: int, window: int | None = None) -> QuotientMeasure:
    """Sum of Gram ranks; finite once the top ``window`` degrees all have rank 0.

    The default window is the number of reflections plus one.
    """
    label = _as_label(w)
    g = beta_gram(label, c, dmax)
    ranks = [g.ranks[d] for d in range(dmax + 1)]
    if window is None:
        window = realization(label).n_reflections + 1
    finite = len(ranks) >= window and all(r == 0 for r in ranks[-window:])
    return QuotientMeasure(finite, sum(ranks), ranks, window)


def gaussian_pair(w, c, p: GradedPoly, q: GradedPoly):
    """``beta_c(exp(f) p, exp(f) q)`` with ``f`` half the Dunkl Laplacian."""
    ops = DunklOperators(w, c)
    return beta_pair(ops, _exp_f(ops, p), _exp_f(ops, q))


def _exp_f(ops: DunklOperators, p: GradedPoly) -> GradedPoly:
    g = ops.real.gram
    n = ops.nvars
    out, term, k = p, p, 0
    while not term.is_zero():
        nxt = GradedPoly(n)
        for i in range(n):
            ti = ops.apply(i, term)
            for j in range(n):
                if not _zero(g[i][j]):
                    nxt = nxt + ops.apply(j, ti).scale(g[i][j])
        k += 1
        term = nxt.scale(Fraction(1, 2 * k))
        out = out + term
    return out


def reflect_poly(w, s: int, p: GradedPoly) -> GradedPoly:
    """Action of the reflection in positive root ``s``."""
    return realization(_as_label(w)).reflect(s, p)


# -- numeric integral side ------------------------------------------------------------


def _to_float(x) -> float:
    if isinstance(x, QSqrt5):
        return float(x)
    if hasattr(x, "coeffs") and hasattr(x, "n"):
        return complex(x).real
    return float(x)


def _frame(real: Realization):
    """Coordinate functions and normalized roots as vectors in an orthonormal frame."""
    g = np.array([[_to_float(x) for x in row] for row in real.gram])
    lower = np.linalg.cholesky(g)
    coords = lower  # row i: x_i as a vector
    roots = []
    for alpha in real.roots:
        v = np.array([_to_float(a) for a in alpha]) @ lower
        roots.append(v * math.sqrt(2) / np.linalg.norm(v))
    return coords, roots


def gaussian_integral(w, c, p: GradedPoly, q: GradedPoly, tol: float = 1e-11) -> float:
    """``(2 pi)^(-r/2) / F_W(c) * int exp(-x^2/2) |Delta|^(-2c) p q dx`` for rank <= 2, ``c <= 0``.

    ``F_W(c)`` is taken from the Gamma product, so agreement with
    ``gaussian_pair`` checks both sides.
    """
    from .mehta import mm_value, mm_value2

    label = _as_label(w)
    real = realization(label)
    if real.nvars > 2:
        raise ValueError("numeric Gaussian integrals are limited to rank <= 2")
    cp = class_parameters(label, c)
    cs = [float(cp[k]) for k in real.classes]
    if any(x > 0 for x in cs):
        raise ValueError("the integral converges only for c <= 0")
    if isinstance(c, (tuple, list)):
        fw = mm_value2(label, *c).value()
    else:
        fw = mm_value(label, c).value()
    coords, roots = _frame(real)
    pq = p * q
    total_power = sum(-2 * x for x in cs)
    if real.nvars == 1:
        val = 0.0
        for e, coef in pq.terms.items():
            k = e[0]
            if k % 2:
                continue
            # int_R exp(-x^2/2) |a x|^(-2c) (b x)^k dx with x in the frame coordinate
            a = abs(roots[0][0]) if len(roots) else 1.0
            b = coords[0][0]
            s = k + total_power
            radial = 2 ** ((s - 1) / 2) * math.gamma((s + 1) / 2)
            val += _to_float(coef) * b ** k * a ** total_power * 2 * radial
        return val / math.sqrt(2 * math.pi) / fw
    angles = [math.atan2(v[1], v[0]) for v in roots]
    cuts = sorted({(a + math.pi / 2) % (2 * math.pi) for a in angles} | {(a - math.pi / 2) % (2 * math.pi) for a in angles}
                  | {0.0, 2 * math.pi})
    by_degree: dict[int, list] = {}
    for e, coef in pq.terms.items():
        by_degree.setdefault(sum(e), []).append((e, _to_float(coef)))
    val = 0.0
    for d, terms in by_degree.items():
        s = d + 1 + total_power
        radial = 2 ** ((s - 1) / 2) * math.gamma((s + 1) / 2)

        def angular(theta, terms=terms):
            u = np.array([math.cos(theta), math.sin(theta)])
            weight = 1.0
            for v, cl in zip(roots, cs):
                weight *= abs(float(v @ u)) ** (-2 * cl)
            xs = coords @ u
            return weight * sum(coef * np.prod(xs ** np.array(e)) for e, coef in terms)

        ang = 0.0
        for lo, hi in zip(cuts[:-1], cuts[1:]):
            if hi - lo > 1e-15:
                ang += integrate.quad(angular, lo, hi, epsabs=0, epsrel=tol, limit=200)[0]
        val += ang * radial
    return val / (2 * math.pi) / fw


def poly_from_terms(nvars: int, terms: Iterable[tuple[tuple[int, ...], object]]) -> GradedPoly:
    return GradedPoly(nvars, dict(terms))
