"""Macdonald-Mehta integrals: exact Gamma products, pole orders and numerics.

A :class:`GammaProduct` keeps every Gamma argument as an affine function of
the parameters (a constant plus integer slopes), so pole orders are exact
integer-hit counts and removable singularities can be evaluated as limits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import numpy as np
from scipy import integrate, special

from .coxeter.roots import positive_roots
from .coxeter.types import CoxeterLabel, canonical_label
from .exact.rational import format_rational, parse_rational
from .poincare import as_type


@dataclass(frozen=True)
class GammaArg:
    """``const + sum lin[j] * c_j`` evaluated at a parameter point."""

    value: Fraction
    lin: tuple[int, ...] = ()

    @property
    def is_pole(self) -> bool:
        return self.value.denominator == 1 and self.value <= 0


@dataclass(frozen=True)
class GammaProduct:
    """``prod Gamma(num) / prod Gamma(den)`` at a fixed parameter."""

    num: tuple[GammaArg, ...]
    den: tuple[GammaArg, ...]

    def num_values(self) -> list[Fraction]:
        return sorted(a.value for a in self.num)

    def den_values(self) -> list[Fraction]:
        return sorted(a.value for a in self.den)

    def pole_order(self) -> int:
        """Poles minus zeros: numerator args in Z<=0 minus denominator args in Z<=0."""
        return sum(a.is_pole for a in self.num) - sum(a.is_pole for a in self.den)

    def reduced(self) -> tuple[list[Fraction], list[Fraction]]:
        """Argument multisets with common values cancelled."""
        num = list(self.num_values())
        den = []
        for v in self.den_values():
            if v in num:
                num.remove(v)
            else:
                den.append(v)
        return num, den

    def same_as(self, other: GammaProduct) -> bool:
        return self.reduced() == other.reduced()

    def log_value(self, direction=None) -> tuple[int, float]:
        """``(sign, log|value|)`` for a finite nonzero value.

        When poles cancel in pairs the value is the limit along ``direction``
        (default: all parameters moving together), computed from residues
        ``Gamma(-n + s*eps) ~ (-1)^n / (n! s eps)``.
        """
        if self.pole_order() != 0:
            raise ValueError("value is zero or infinite")
        log_abs, sign = 0.0, 1
        for args, power in ((self.num, 1), (self.den, -1)):
            for a in args:
                if a.is_pole:
                    n = -int(a.value)
                    d = direction if direction is not None else (1,) * len(a.lin)
                    s = sum(x * y for x, y in zip(a.lin, d))
                    if s == 0:
                        raise ValueError("direction is parallel to a pole hyperplane")
                    log_abs += power * (-math.lgamma(n + 1) - math.log(abs(s)))
                    sign *= ((-1) ** n) * (1 if s > 0 else -1)
                else:
                    x = float(a.value)
                    log_abs += power * float(special.gammaln(x))
                    sign *= int(special.gammasgn(x))
        return sign, log_abs

    def value(self, direction=None) -> float:
        """Numeric value; ``inf`` at a pole, ``0.0`` at a zero, ``nan`` for a bad direction."""
        order = self.pole_order()
        if order > 0:
            return math.inf
        if order < 0:
            return 0.0
        try:
            sign, log_abs = self.log_value(direction)
        except ValueError:
            return math.nan
        if log_abs > 709.0:
            return sign * math.inf
        return sign * math.exp(log_abs)

    def to_string(self) -> str:
        def side(vals):
            return "*".join(f"Γ({format_rational(v)})" for v in vals) or "1"

        num, den = self.reduced()
        return f"{side(num)}/{side(den)}"

    __str__ = to_string


def _arg(const, lin, c) -> GammaArg:
    v = Fraction(const) + sum(Fraction(a) * x for a, x in zip(lin, c))
    return GammaArg(v, tuple(lin))


def mm_value(w, c) -> GammaProduct:
    """``prod Gamma(1 - d_i c) / Gamma(1 - c)^r``."""
    c = parse_rational(c)
    t = as_type(w)
    num = tuple(_arg(1, (-d,), (c,)) for d in t.degrees())
    den = tuple(_arg(1, (-1,), (c,)) for _ in t.degrees())
    return GammaProduct(num, den)


def _two_param_label(w) -> CoxeterLabel:
    t = as_type(w)
    if not t.is_irreducible:
        raise ValueError("two-parameter integral needs an irreducible type")
    label = w if isinstance(w, CoxeterLabel) else t.factors[0].label
    lab = canonical_label(label)
    if not (lab.family in "BF" or (label.family == "I" and label.p % 2 == 0)):
        raise ValueError(f"{label.name} does not have two reflection classes")
    return label


def mm_value2(w, c1, c2) -> GammaProduct:
    """Two-parameter Gamma product: dihedral closed form or Weyl root product."""
    c = (parse_rational(c1), parse_rational(c2))
    label = _two_param_label(w)
    if label.swapped:
        c = (c[1], c[0])
    if label.family == "I" and label.p not in (4, 6):
        m = label.p // 2
        num = (_arg(1, (-2, 0), c), _arg(1, (0, -2), c), _arg(1, (-m, -m), c))
        den = (_arg(1, (-1, 0), c), _arg(1, (0, -1), c), _arg(1, (-1, -1), c))
        return _swap_lin(GammaProduct(num, den), label.swapped)
    data = positive_roots(label.unswapped())
    num, den = [], []
    for vec, cl in zip(data.roots, data.classes):
        h = [0, 0]
        for x, node_cl in zip(vec, data.node_classes):
            h[node_cl - 1] += int(x)
        den.append(_arg(1, (-h[0], -h[1]), c))
        num.append(_arg(1, (-h[0] - (cl == 1), -h[1] - (cl == 2)), c))
    return _swap_lin(GammaProduct(tuple(num), tuple(den)), label.swapped)


def mm_value2_dihedral(m: int, c1, c2) -> GammaProduct:
    """The dihedral closed form for ``I2(2m)`` (also usable for B2 = I2(4), G2 = I2(6))."""
    c = (parse_rational(c1), parse_rational(c2))
    num = (_arg(1, (-2, 0), c), _arg(1, (0, -2), c), _arg(1, (-m, -m), c))
    den = (_arg(1, (-1, 0), c), _arg(1, (0, -1), c), _arg(1, (-1, -1), c))
    return GammaProduct(num, den)


def _swap_lin(g: GammaProduct, swapped: bool) -> GammaProduct:
    if not swapped:
        return g

    def sw(a):
        return GammaArg(a.value, tuple(reversed(a.lin)))

    return GammaProduct(tuple(sw(a) for a in g.num), tuple(sw(a) for a in g.den))


# -- ratio test -----------------------------------------------------------------


def mm_ratio_nonzero(w, wa, c) -> bool:
    """Does ``F_Wa / F_W`` stay nonzero at ``c``?

    One parameter: the ratio is nonzero exactly when its pole order,
    ``order(F_Wa) - order(F_W)``, is zero. Two parameters (``c`` a pair):
    group Gamma arguments by the direction of their linear part; the ratio
    vanishes identically along a positive line through ``c`` exactly when, in
    that direction, ``F_W`` has more poles than ``F_Wa``.
    """
    from .coxeter.parabolic import ParabolicClass

    wa_t = wa.ctype if isinstance(wa, ParabolicClass) else as_type(wa)
    if isinstance(c, (tuple, list)):
        return _ratio_nonzero_two(w, wa_t, c)
    return mm_value(wa_t, c).pole_order() - mm_value(w, c).pole_order() == 0


def _gamma_two_of_type(t, c) -> GammaProduct:
    """Two-parameter Gamma product of a class-labelled (possibly reducible) type."""
    num, den = [], []
    for f in t.factors:
        classes = set(f.classes)
        if len(classes) == 1:
            (k,) = classes
            for d in f.label.degrees():
                lin_d = (-d, 0) if k == 1 else (0, -d)
                lin_1 = (-1, 0) if k == 1 else (0, -1)
                num.append(_arg(1, lin_d, c))
                den.append(_arg(1, lin_1, c))
        else:
            label = f.label
            own = label.node_classes()
            swapped = own != tuple(f.classes)
            g = mm_value2(label, *((c[1], c[0]) if swapped else c))
            g = _swap_lin(g, swapped)
            num.extend(g.num)
            den.extend(g.den)
    return GammaProduct(tuple(num), tuple(den))


def _direction(lin) -> tuple[int, int] | None:
    u, v = -lin[0], -lin[1]
    if u < 0 or v < 0 or (u, v) == (0, 0):
        return None
    g = gcd(u, v)
    return (u // g, v // g)


def _ratio_nonzero_two(w, wa_t, c) -> bool:
    c = (parse_rational(c[0]), parse_rational(c[1]))
    fw = _gamma_two_of_type(as_type(w), c)
    fa = _gamma_two_of_type(wa_t, c)
    net: dict = {}
    for g, sign in ((fw, 1), (fa, -1)):
        for args, s2 in ((g.num, 1), (g.den, -1)):
            for a in args:
                if a.is_pole:
                    d = _direction(a.lin)
                    if d is not None:
                        net[d] = net.get(d, 0) + sign * s2
    return all(v <= 0 for v in net.values())


# -- numerics -----------------------------------------------------------------


class QuadratureError(RuntimeError):
    """The requested tolerance was not reached."""


def _planar_roots(label: CoxeterLabel):
    """Root directions (angles) and classes for a rank-2 type, all of norm 2."""
    lab = canonical_label(label)
    if lab.family == "A" and lab.rank == 2:
        p = 3
    elif lab.family == "B" and lab.rank == 2:
        p = 4
    elif label.family == "I":
        p = label.p
    else:
        raise ValueError(f"{label.name} is not of rank 2")
    out = []
    for k in range(p):
        cls = 1 if (p % 2 or k % 2 == 0) else 2
        if lab.family == "B":
            # e1+e2, -e1+e2 (odd k) are the long roots, class 1
            cls = 1 if k % 2 else 2
        out.append((k * math.pi / p, cls))
    if label.swapped:
        out = [(a, 3 - cl) for a, cl in out]
    return out


def _params(c):
    if isinstance(c, (tuple, list)):
        return float(c[0]), float(c[1])
    return float(c), float(c)


def mm_numeric(w, c, tol: float = 1e-10, method: str = "quad"):
    """``(2 pi)^(-r/2) int exp(-x^2/2) |Delta|^(-2c) dx`` for rank <= 2, ``c <= 0``.

    ``c`` is a number or a pair ``(c1, c2)``. Returns ``(value, error)``.
    ``method="quad"`` uses adaptive quadrature (polar, with the angular range
    split at every mirror); ``method="mc"`` uses stratified sampling.
    """
    t = as_type(w)
    if t.rank > 2 or not t.is_irreducible:
        raise ValueError("numeric Macdonald-Mehta integrals are limited to irreducible rank <= 2")
    c1, c2 = _params(c)
    if c1 > 0 or c2 > 0:
        raise ValueError("the integral converges only for c <= 0")
    label = w if isinstance(w, CoxeterLabel) else t.factors[0].label
    if t.rank == 1:
        return _rank1(c1, tol, method)
    roots = _planar_roots(label)
    return _rank2(roots, (c1, c2), tol, method)


def _rank1(c: float, tol: float, method: str):
    # root sqrt(2) x; integrand even in x
    def f(x):
        return math.exp(-x * x / 2) * (math.sqrt(2) * x) ** (-2 * c)

    if method == "mc":
        n = 400_000
        u = (np.arange(n) + np.random.default_rng(7).random(n)) / n
        x = special.ndtri(0.5 + 0.5 * u)  # |X| for X standard normal, stratified
        vals = (np.sqrt(2) * x) ** (-2 * c)
        return float(vals.mean()), float(vals.std() / n)
    val, err = integrate.quad(f, 0, np.inf, epsabs=0, epsrel=tol, limit=200)
    norm = 2 / math.sqrt(2 * math.pi)
    return val * norm, err * norm


def _rank2(roots, c, tol, method):
    c1, c2 = c
    exps = {1: c1, 2: c2}
    total_power = sum(-2 * exps[cl] for _, cl in roots)

    def angular(theta):
        out = 1.0
        for phi, cl in roots:
            out *= abs(math.sqrt(2) * math.cos(theta - phi)) ** (-2 * exps[cl])
        return out

    def radial_integrand(r):
        return r ** (1 + total_power) * math.exp(-r * r / 2)

    rad, rad_err = integrate.quad(radial_integrand, 0, np.inf, epsabs=0, epsrel=tol, limit=200)
    # mirrors of the integrand: zeros of cos(theta - phi)
    cuts = sorted({(phi + math.pi / 2) % math.pi for phi, _ in roots} | {0.0, math.pi})
    if method == "mc":
        n = 200_000
        rng = np.random.default_rng(11)
        u = (np.arange(n) + rng.random(n)) / n * math.pi
        vals = np.ones(n)
        for phi, cl in roots:
            vals *= np.abs(np.sqrt(2) * np.cos(u - phi)) ** (-2 * exps[cl])
        ang = vals.mean() * math.pi
        ang_err = vals.std() * math.pi / n
    else:
        ang, ang_err = 0.0, 0.0
        for a, b in zip(cuts[:-1], cuts[1:]):
            if b - a < 1e-15:
                continue
            v, e = integrate.quad(angular, a, b, epsabs=0, epsrel=tol, limit=200)
            ang += v
            ang_err += e
    # theta over [0, pi) covers half the circle; the integrand is pi-periodic
    ang *= 2
    ang_err *= 2
    value = ang * rad / (2 * math.pi)
    err = (ang_err * rad + ang * rad_err) / (2 * math.pi)
    if method == "quad" and err > max(tol, 1e-9) * abs(value) * 1e3:
        raise QuadratureError(f"quadrature error {err:.3g} above tolerance")
    return value, err
