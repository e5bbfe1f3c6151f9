"""Exact root systems for every catalog type.

Roots are stored by their coordinates in the basis of simple roots, together
with the Gram matrix of that basis. Crystallographic types use integer or
rational Gram matrices; H3, H4 and I2(5) live over Q(sqrt 5); the remaining
dihedral groups use an angle model over Q(zeta_2p), where
``2 cos(pi/p) = zeta + zeta^-1``.

Positive roots are ordered simple-roots-first, then by height. Root index
``k + N`` stands for the negative of positive root ``k``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from ..exact.cyclo import CycloNum
from ..exact.qsqrt5 import QSqrt5
from .types import CoxeterLabel


def _cartan_sym(n: int, edges) -> list[list]:
    b = [[0] * n for _ in range(n)]
    for i in range(n):
        b[i][i] = 2
    for i, j in edges:
        b[i][j] = b[j][i] = -1
    return b


def _orthonormal(label: CoxeterLabel):
    """Simple roots in the standard e-basis for A1, B_n and D_n."""
    n = label.rank
    if label.family == "A":
        return [[1]]
    rows = []
    for i in range(n - 1):
        v = [0] * n
        v[i], v[i + 1] = 1, -1
        rows.append(v)
    last = [0] * n
    if label.family == "B" or (label.family == "I" and label.p == 4):
        last[n - 1] = 1
    else:
        last[n - 2], last[n - 1] = 1, 1
    rows.append(last)
    return rows


def _gram_from(vectors):
    return [[sum(a * b for a, b in zip(u, v)) for v in vectors] for u in vectors]


@dataclass
class _Model:
    kind: str  # "rational" | "qsqrt5" | "cyclo"
    gram: list  # Gram matrix of the simple roots
    ambient: list | None  # simple roots in an orthonormal e-basis, if any
    conductor: int = 1


def _model(label: CoxeterLabel) -> _Model:
    f, n, p = label.family, label.rank, label.p
    if f == "I" and p == 3:
        f, n = "A", 2
    if (f == "A" and n == 1) or f in "BD" or (f == "I" and p == 4):
        amb = _orthonormal(label if f != "I" else CoxeterLabel("B", 2))
        return _Model("rational", _gram_from(amb), amb)
    if f == "A":
        return _Model("rational", _cartan_sym(n, [(i, i + 1) for i in range(n - 1)]), None)
    if f == "E":
        edges = [(0, 2), (2, 3), (1, 3)] + [(i, i + 1) for i in range(3, n - 1)]
        return _Model("rational", _cartan_sym(n, edges), None)
    if f == "F":
        # long roots of squared length 4, short of length 2
        return _Model("rational", [[4, -2, 0, 0], [-2, 4, -2, 0], [0, -2, 2, -1], [0, 0, -1, 2]], None)
    if f == "I" and p == 6:
        # node 1 short, node 2 long (G2 with the class of the first node first)
        return _Model("rational", [[2, -3], [-3, 6]], None)
    if f == "H" or (f == "I" and p == 5):
        tau = QSqrt5.golden()
        g = [[QSqrt5(2 if i == j else 0) for j in range(n)] for i in range(n)]
        m = label.coxeter_matrix() if f == "H" else [[1, 5], [5, 1]]
        for i in range(n):
            for j in range(n):
                if m[i][j] == 3:
                    g[i][j] = QSqrt5(-1)
                elif m[i][j] == 5:
                    g[i][j] = -tau
        return _Model("qsqrt5", g, None)
    # generic dihedral angle model
    N = 2 * p
    two_cos = CycloNum.zeta(N, 1) + CycloNum.zeta(N, N - 1)
    two = CycloNum(N, [2])
    return _Model("cyclo", [[two, -two_cos], [-two_cos, two]], None, N)


def _sign(x, kind: str) -> int:
    if kind == "rational":
        return (x > 0) - (x < 0)
    if isinstance(x, QSqrt5):
        return x.sign()
    if isinstance(x, CycloNum):
        if x.is_zero():
            return 0
        v = complex(x).real
        return 1 if v > 0 else -1
    return (x > 0) - (x < 0)


def _key(vec, kind: str, conductor: int):
    if kind != "cyclo":
        return tuple(vec)
    out = []
    for x in vec:
        out.append(CycloNum.coerce(x).lift(conductor).coeffs)
    return tuple(out)


@dataclass
class RootSystemData:
    """Positive roots of a finite Coxeter group with class ids and heights."""

    label: CoxeterLabel
    kind: str
    gram: list
    roots: list  # positive roots, coordinates in the simple-root basis
    classes: list[int]
    node_classes: tuple[int, ...]
    perms: np.ndarray  # simple reflection i as a permutation of the 2N root indices
    ambient: list | None = None
    conductor: int = 1
    heights: list | None = None
    _index: dict = field(default_factory=dict, repr=False)

    @property
    def rank(self) -> int:
        return self.label.rank

    @property
    def n_pos(self) -> int:
        return len(self.roots)

    def inner(self, u, v):
        g = self.gram
        r = len(u)
        return sum(u[i] * g[i][j] * v[j] for i in range(r) if u[i] != 0 for j in range(r) if v[j] != 0)

    def norm(self, k: int):
        return self.inner(self.roots[k], self.roots[k])

    def root(self, idx: int):
        """Coordinates of root ``idx`` (negatives are ``idx >= N``)."""
        n = self.n_pos
        if idx < n:
            return self.roots[idx]
        return tuple(-x for x in self.roots[idx - n])

    def index_of(self, vec) -> int:
        k = _key(vec, self.kind, self.conductor)
        if k in self._index:
            return self._index[k]
        neg = _key([-x for x in vec], self.kind, self.conductor)
        if neg in self._index:
            return self._index[neg] + self.n_pos
        raise KeyError("vector is not a root")

    def reflect(self, alpha, beta):
        """``s_alpha(beta)`` for coordinate vectors."""
        k = 2 * self.inner(alpha, beta) / self.inner(alpha, alpha)
        if isinstance(k, Fraction) and k.denominator == 1:
            k = k.numerator
        return tuple(b - k * a for a, b in zip(alpha, beta))

    def reflection_perm(self, k: int) -> np.ndarray:
        """The reflection in positive root ``k`` as a permutation of root indices."""
        alpha = self.roots[k]
        n = self.n_pos
        out = np.empty(2 * n, dtype=np.int32)
        for j in range(n):
            t = self.index_of(self.reflect(alpha, self.roots[j]))
            out[j] = t
            out[j + n] = t + n if t < n else t - n
        return out

    def ambient_vector(self, k: int):
        """Positive root ``k`` in the orthonormal e-basis (B_n, D_n, A1 only)."""
        if self.ambient is None:
            raise ValueError(f"{self.label.name} has no e-basis model")
        r = len(self.ambient[0])
        v = [0] * r
        for i, c in enumerate(self.roots[k]):
            if c:
                for t in range(r):
                    v[t] += c * self.ambient[i][t]
        return tuple(v)

    def class_counts(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for c in self.classes:
            out[c] = out.get(c, 0) + 1
        return out


def _build(label: CoxeterLabel) -> RootSystemData:
    model = _model(label)
    r = label.rank
    kind = model.kind
    g = model.gram
    one = 1
    simple = []
    for i in range(r):
        simple.append(tuple(one if j == i else 0 for j in range(r)))
    node_cls = label.node_classes()

    def reflect_simple(i, beta):
        ip = sum(g[i][j] * beta[j] for j in range(r) if beta[j] != 0)
        k = 2 * ip / g[i][i] if kind != "rational" else Fraction(2 * ip, g[i][i])
        if isinstance(k, Fraction) and k.denominator == 1:
            k = k.numerator
        out = list(beta)
        out[i] = out[i] - k
        return tuple(out)

    roots = list(simple)
    classes = list(node_cls)
    seen = {_key(v, kind, model.conductor): i for i, v in enumerate(roots)}
    frontier = list(range(r))
    while frontier:
        nxt = []
        for idx in frontier:
            beta = roots[idx]
            for i in range(r):
                gamma = reflect_simple(i, beta)
                signs = {_sign(x, kind) for x in gamma} - {0}
                if signs != {1}:
                    continue
                key = _key(gamma, kind, model.conductor)
                if key in seen:
                    continue
                seen[key] = len(roots)
                roots.append(gamma)
                classes.append(classes[idx])
                nxt.append(len(roots) - 1)
        frontier = nxt

    # order: simple roots first, then by (float) height
    def height(v):
        if kind == "cyclo":
            return sum(complex(CycloNum.coerce(x)).real for x in v)
        return float(sum(v, Fraction(0)) if kind == "rational" else sum(float(x) for x in v))

    order = list(range(r)) + sorted(range(r, len(roots)), key=lambda k: (round(height(roots[k]), 9), k))
    roots = [roots[k] for k in order]
    classes = [classes[k] for k in order]
    index = {_key(v, kind, model.conductor): i for i, v in enumerate(roots)}

    n = len(roots)
    perms = np.empty((r, 2 * n), dtype=np.int32)
    for i in range(r):
        for j, beta in enumerate(roots):
            gamma = reflect_simple(i, beta)
            key = _key(gamma, kind, model.conductor)
            if key in index:
                t = index[key]
            else:
                t = index[_key([-x for x in gamma], kind, model.conductor)] + n
            perms[i, j] = t
            perms[i, j + n] = t + n if t < n else t - n

    heights = None
    if label.crystallographic:
        heights = []
        for v in roots:
            h = [0, 0]
            for c, cl in zip(v, node_cls):
                h[min(cl, 2) - 1] += int(c)
            heights.append(tuple(h))

    return RootSystemData(
        label=label,
        kind=kind,
        gram=g,
        roots=roots,
        classes=classes,
        node_classes=node_cls,
        perms=perms,
        ambient=model.ambient,
        conductor=model.conductor,
        heights=heights,
        _index=index,
    )


@lru_cache(maxsize=None)
def positive_roots(label: CoxeterLabel) -> RootSystemData:
    """Exact positive roots of an irreducible catalog type (cached)."""
    return _build(label)


def exponents_from_heights(data: RootSystemData) -> list[int]:
    """Exponents as the conjugate partition of the multiset of root heights."""
    if data.heights is None:
        raise ValueError("heights need a crystallographic type")
    total = [h1 + h2 for h1, h2 in data.heights]
    counts: dict[int, int] = {}
    for t in total:
        counts[t] = counts.get(t, 0) + 1
    top = max(counts)
    # number of roots of height k, for k = 1..top, is non-increasing
    seq = [counts.get(k, 0) for k in range(1, top + 1)]
    exps = []
    for j in range(len(seq)):
        nxt = seq[j + 1] if j + 1 < len(seq) else 0
        exps.extend([j + 1] * (seq[j] - nxt))
    return sorted(exps)
