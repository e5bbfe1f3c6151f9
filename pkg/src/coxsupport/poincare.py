"""One- and two-variable Poincare polynomials, a-counts and exact ratios."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache

from .coxeter.groups import element_table
from .coxeter.roots import positive_roots
from .coxeter.types import CoxeterLabel, CoxeterType, Factor, canonical_label
from .exact.poly import BiLaurent, UniPoly, poly_div_exact


def as_type(t) -> CoxeterType:
    if isinstance(t, CoxeterType):
        return t
    if isinstance(t, CoxeterLabel):
        return CoxeterType.of(t)
    if isinstance(t, Factor):
        return CoxeterType((t,))
    raise TypeError(f"expected a Coxeter type, got {t!r}")


def degrees(t) -> list[int]:
    return as_type(t).degrees()


def a_count(t, m: int) -> int:
    """Number of degrees divisible by ``m``."""
    if m < 1:
        raise ValueError("m must be a positive integer")
    return sum(1 for d in degrees(t) if d % m == 0)


def _q_integer(d: int) -> UniPoly:
    return UniPoly([1] * d)


@lru_cache(maxsize=None)
def _poincare1(t: CoxeterType) -> UniPoly:
    out = UniPoly([1])
    for d in t.degrees():
        out = out * _q_integer(d)
    return out


def poincare1(t) -> UniPoly:
    """``prod (1 - q^d_i)/(1 - q)`` expanded."""
    return _poincare1(as_type(t))


@dataclass(frozen=True)
class FactoredBiPoincare:
    """``prod (1 - q1^u q2^v)`` over numerator binomials divided by denominator ones.

    Both sides are multisets of exponent pairs ``(u, v)``. Common binomials
    cancel on construction.
    """

    num: tuple = ()
    den: tuple = ()
    _num: Counter = field(init=False, repr=False, compare=False)
    _den: Counter = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        n, d = Counter(self.num), Counter(self.den)
        common = n & d
        n, d = n - common, d - common
        object.__setattr__(self, "_num", n)
        object.__setattr__(self, "_den", d)
        object.__setattr__(self, "num", tuple(sorted(n.elements())))
        object.__setattr__(self, "den", tuple(sorted(d.elements())))

    def __mul__(self, other: FactoredBiPoincare) -> FactoredBiPoincare:
        return FactoredBiPoincare(self.num + other.num, self.den + other.den)

    def __truediv__(self, other: FactoredBiPoincare) -> FactoredBiPoincare:
        return FactoredBiPoincare(self.num + other.den, self.den + other.num)

    def numerator_counts(self) -> Counter:
        return Counter(self._num)

    def denominator_counts(self) -> Counter:
        return Counter(self._den)

    def directions(self) -> set[tuple[int, int]]:
        return set(self._num) | set(self._den)

    def expand(self) -> BiLaurent:
        """Multiply out and divide exactly; raises NotDivisible for a non-polynomial."""
        out = BiLaurent({(0, 0): 1})
        for u, v in self.num:
            out = out * BiLaurent.binomial(u, v)
        for u, v in self.den:
            out = out.div_binomial(u, v)
        return out

    def at_one(self) -> int:
        return self.expand().mass()

    def swap(self) -> FactoredBiPoincare:
        return FactoredBiPoincare(tuple((v, u) for u, v in self.num), tuple((v, u) for u, v in self.den))

    def to_string(self) -> str:
        def side(ms):
            if not ms:
                return "1"
            return "*".join(f"(1-{_mono(u, v)})" for u, v in ms)

        return f"{side(self.num)} / {side(self.den)}"

    __str__ = to_string


def _mono(u, v):
    parts = []
    for e, name in ((u, "q1"), (v, "q2")):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return "*".join(parts) or "1"


def _unit(cls_id: int, k: int = 1) -> tuple[int, int]:
    return (k, 0) if cls_id == 1 else (0, k)


def _factor_poincare2(f: Factor) -> FactoredBiPoincare:
    label, classes = f.label, f.classes
    present = set(classes)
    if len(present) == 1:
        (c,) = present
        return FactoredBiPoincare(
            tuple(_unit(c, d) for d in label.degrees()), tuple(_unit(c) for _ in label.degrees())
        )
    if label.crystallographic:
        return _root_product(label, classes)
    if label.family == "I" and label.p % 2 == 0:
        m = label.p // 2
        c0, c1 = classes
        return FactoredBiPoincare(
            (_unit(c0, 2), _unit(c1, 2), (m, m)), (_unit(c0), _unit(c1), (1, 1))
        )
    raise ValueError(f"{label.name} has no two-class structure")


def _root_product(label: CoxeterLabel, classes) -> FactoredBiPoincare:
    """Macdonald's product over positive roots with class heights."""
    data = positive_roots(label)
    own = data.node_classes
    relabel = {own[i]: classes[i] for i in range(len(classes))}
    num, den = [], []
    for vec, cl in zip(data.roots, data.classes):
        h = [0, 0]
        for c, node_cl in zip(vec, classes):
            h[node_cl - 1] += int(c)
        q = relabel[cl]
        den.append((h[0], h[1]))
        num.append((h[0] + (q == 1), h[1] + (q == 2)))
    return FactoredBiPoincare(tuple(num), tuple(den))


def poincare2(t) -> FactoredBiPoincare:
    """Factored two-variable Poincare polynomial of a class-labelled type.

    Irreducible labels must have two reflection classes; class-labelled
    products (such as parabolic subgroups) are handled factor by factor, a
    one-class factor contributing its one-variable polynomial in its own
    class variable.
    """
    if isinstance(t, CoxeterLabel) and t.num_classes() != 2:
        raise ValueError(f"{t.name} has a single class of reflections")
    out = FactoredBiPoincare()
    for f in as_type(t).factors:
        out = out * _factor_poincare2(f)
    return out


def poincare2_expanded(t) -> BiLaurent:
    return poincare2(t).expand()


def _range_sum(u: int, v: int, k: int) -> BiLaurent:
    """``1 + x + ... + x^(k-1)`` with ``x = q1^u q2^v``."""
    return BiLaurent({(u * i, v * i): 1 for i in range(k)})


def poincare2_explicit(label: CoxeterLabel) -> BiLaurent:
    """Closed product forms for I2(2m), B_n and F4 (class 1 = first node).

    The B_n product runs over ``j = 0..n-1`` in both factors, which gives
    total mass ``|B_n|``.
    """
    lab = canonical_label(label)
    q1 = BiLaurent.monomial(1, 0)
    q2 = BiLaurent.monomial(0, 1)
    one = BiLaurent({(0, 0): 1})
    if label.family == "I":
        p = label.p
        if p % 2:
            raise ValueError(f"{label.name} has a single class of reflections")
        out = (one + q1) * (one + q2) * _range_sum(1, 1, p // 2)
    elif lab.family == "B":
        n = lab.rank
        out = one
        for j in range(n):
            out = out * _range_sum(1, 0, j + 1) * (one + BiLaurent.monomial(j, 1))
    elif lab.family == "F":
        out = _range_sum(1, 0, 2) * _range_sum(1, 0, 3) * _range_sum(0, 1, 2) * _range_sum(0, 1, 3)
        for i, j in ((2, 1), (1, 2), (1, 1), (2, 2), (3, 3)):
            out = out * (one + BiLaurent.monomial(i, j))
    else:
        raise ValueError(f"no closed two-variable form for {label.name}")
    return out.swap() if label.swapped else out


def poincare_bruteforce(label: CoxeterLabel, two_var: bool = False, cap: int | None = None):
    """Sum of ``q^l(w)`` (or ``q1^l1 q2^l2``) over all enumerated elements."""
    table = element_table(label, cap)
    if two_var:
        counts = Counter(zip(table.l1.tolist(), table.l2.tolist()))
        return BiLaurent(dict(counts))
    counts = Counter(table.length.tolist())
    return UniPoly(dict(counts))


def poincare_ratio(w, wsub) -> UniPoly:
    """Exact quotient ``P_W / P_Wsub``; NotDivisible flags an impossible subgroup."""
    return poly_div_exact(poincare1(w), poincare1(wsub))
