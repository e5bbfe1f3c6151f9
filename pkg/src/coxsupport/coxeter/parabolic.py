"""Standard parabolic subgroups and identification of reflection subsystems."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .roots import RootSystemData
from .types import CoxeterLabel, CoxeterType, Factor, UnknownTypeError


def _components(m, nodes):
    nodes = list(nodes)
    left = set(nodes)
    comps = []
    while left:
        start = min(left)
        comp = [start]
        left.discard(start)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in list(left):
                if m[i][j] != 2:
                    left.discard(j)
                    comp.append(j)
                    stack.append(j)
        comps.append(sorted(comp))
    return comps


def _candidates(n: int, edge_labels) -> list[CoxeterLabel]:
    if n == 1:
        return [CoxeterLabel("A", 1)]
    if n == 2:
        (p,) = edge_labels
        if p == 3:
            return [CoxeterLabel("A", 2)]
        if p == 4:
            return [CoxeterLabel("B", 2)]
        return [CoxeterLabel("I", 2, p)]
    out = [CoxeterLabel("A", n), CoxeterLabel("B", n)]
    if n >= 4:
        out.append(CoxeterLabel("D", n))
    if n in (6, 7, 8):
        out.append(CoxeterLabel("E", n))
    if n == 4:
        out.append(CoxeterLabel("F", 4))
    if n in (3, 4):
        out.append(CoxeterLabel("H", n))
    return out


def _isomorphism(a, b):
    """Node map ``phi`` with ``a[i][j] == b[phi[i]][phi[j]]``, or None."""
    n = len(a)
    phi = [-1] * n
    used = [False] * n

    def ok(i, t):
        for k in range(i):
            if a[k][i] != b[phi[k]][t]:
                return False
        return sum(a[i][j] != 2 for j in range(n)) == sum(b[t][j] != 2 for j in range(n))

    def go(i):
        if i == n:
            return True
        for t in range(n):
            if not used[t] and ok(i, t):
                phi[i] = t
                used[t] = True
                if go(i + 1):
                    return True
                used[t] = False
        return False

    return phi if go(0) else None


def identify_component(m) -> tuple[CoxeterLabel, list[int]]:
    """Catalog label of a connected Coxeter matrix and the node map into it."""
    n = len(m)
    labels = [m[i][j] for i in range(n) for j in range(i + 1, n) if m[i][j] != 2]
    for cand in _candidates(n, labels):
        phi = _isomorphism(m, cand.coxeter_matrix())
        if phi is not None:
            return cand, phi
    raise UnknownTypeError(f"Coxeter matrix {m} is not a finite type")


def type_of_matrix(m, node_classes, nodes=None) -> CoxeterType:
    """Class-labelled type of the Coxeter diagram ``m`` restricted to ``nodes``."""
    if nodes is None:
        nodes = range(len(m))
    factors = []
    for comp in _components(m, nodes):
        sub = [[m[i][j] for j in comp] for i in comp]
        label, phi = identify_component(sub)
        classes = [0] * len(comp)
        for k, i in enumerate(comp):
            classes[phi[k]] = node_classes[i]
        factors.append(Factor.canonical(label, classes))
    return CoxeterType(tuple(factors))


@dataclass(frozen=True)
class ParabolicClass:
    """Standard parabolic subgroups sharing one class-labelled type."""

    nodes: tuple[int, ...]  # canonical representative (first subset found)
    ctype: CoxeterType
    ambient_rank: int
    count: int = 1  # number of node subsets with this type

    @property
    def rank(self) -> int:
        return len(self.nodes)

    def degrees(self) -> list[int]:
        return self.ctype.degrees()

    @property
    def maximal(self) -> bool:
        return self.rank == self.ambient_rank - 1

    @property
    def name(self) -> str:
        return self.ctype.name

    def class_name(self) -> str:
        return self.ctype.class_name()


def _ambient_matrix(t: CoxeterType):
    blocks = []
    classes = []
    for f in t.factors:
        blocks.append(f.label.coxeter_matrix())
        classes.extend(f.classes)
    r = sum(len(b) for b in blocks)
    m = [[2] * r for _ in range(r)]
    off = 0
    for b in blocks:
        for i in range(len(b)):
            for j in range(len(b)):
                m[off + i][off + j] = b[i][j]
        off += len(b)
    return m, classes


def standard_parabolics(t: CoxeterType | CoxeterLabel) -> list[ParabolicClass]:
    """All node subsets grouped by class-labelled type, smallest rank first."""
    if isinstance(t, CoxeterLabel):
        t = CoxeterType.of(t)
    m, classes = _ambient_matrix(t)
    r = len(m)
    found: dict[CoxeterType, list] = {}
    for k in range(r + 1):
        for nodes in combinations(range(r), k):
            key = type_of_matrix(m, classes, nodes)
            if key in found:
                found[key][1] += 1
            else:
                found[key] = [nodes, 1]
    return [ParabolicClass(nodes, key, r, cnt) for key, (nodes, cnt) in found.items()]


def maximal_parabolics(t) -> list[ParabolicClass]:
    return [p for p in standard_parabolics(t) if p.maximal]


def _perm_order(p: np.ndarray) -> int:
    ident = np.arange(p.shape[0])
    cur = p.copy()
    k = 1
    while not np.array_equal(cur, ident):
        cur = cur[p]
        k += 1
    return k


class NotClosedError(ValueError):
    """The root subset is not closed under its own reflections."""


def subsystem_simple_roots(data: RootSystemData, subset) -> list[int]:
    """Simple roots of the reflection subsystem spanned by positive roots ``subset``.

    Checks closure: every ``s_a`` with ``a`` in the subset must map the subset
    onto itself up to sign. A root ``a`` is simple for the induced positive
    system exactly when ``s_a`` permutes the other positive roots.
    """
    subset = sorted(set(int(k) for k in subset))
    n = data.n_pos
    members = set(subset)
    simple = []
    for a in subset:
        perm = data.reflection_perm(a)
        stays_positive = True
        for b in subset:
            img = int(perm[b])
            pos = img if img < n else img - n
            if pos not in members:
                raise NotClosedError(f"reflection in root {a} maps root {b} outside the subset")
            if b != a and img >= n:
                stays_positive = False
        if stays_positive:
            simple.append(a)
    return simple


def identify_subsystem(data: RootSystemData, subset) -> tuple[CoxeterType, list[int]]:
    """Type (with inherited class labels) of a closed set of positive roots."""
    simple = subsystem_simple_roots(data, subset)
    if not simple:
        return CoxeterType(()), []
    perms = [data.reflection_perm(a) for a in simple]
    k = len(simple)
    m = [[1] * k for _ in range(k)]
    for i in range(k):
        for j in range(i + 1, k):
            m[i][j] = m[j][i] = _perm_order(perms[i][perms[j]])
    classes = [data.classes[a] for a in simple]
    return type_of_matrix(m, classes), simple
