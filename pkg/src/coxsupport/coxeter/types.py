"""Coxeter labels, class-labelled types and the type-string parser."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from math import prod

FAMILIES = ("A", "B", "D", "E", "F", "H", "I")


class UnknownTypeError(ValueError):
    """Raised for a type name or rank outside the catalog."""


@dataclass(frozen=True, order=True)
class CoxeterLabel:
    """An irreducible finite Coxeter type such as ``A3``, ``F4`` or ``I2(8)``.

    ``p`` is the dihedral edge label (only for family ``I``). ``swapped``
    exchanges the names of the two reflection classes for two-class types.
    """

    family: str
    rank: int
    p: int = 0
    swapped: bool = False

    def __post_init__(self):
        f, n = self.family, self.rank
        ok = {
            "A": n >= 1,
            "B": n >= 2,
            "D": n >= 4,
            "E": n in (6, 7, 8),
            "F": n == 4,
            "H": n in (3, 4),
            "I": n == 2 and self.p >= 3,
        }.get(f, False)
        if not ok:
            raise UnknownTypeError(f"no finite Coxeter type {f}{n}" + (f"({self.p})" if f == "I" else ""))
        if f != "I" and self.p:
            raise UnknownTypeError("edge parameter only applies to I2(p)")

    @property
    def name(self) -> str:
        base = f"I2({self.p})" if self.family == "I" else f"{self.family}{self.rank}"
        return base + ("~" if self.swapped else "")

    @property
    def crystallographic(self) -> bool:
        if self.family == "I":
            return self.p in (3, 4, 6)
        return self.family != "H"

    def degrees(self) -> list[int]:
        f, n = self.family, self.rank
        if f == "A":
            return list(range(2, n + 2))
        if f == "B":
            return list(range(2, 2 * n + 1, 2))
        if f == "D":
            return sorted(list(range(2, 2 * n - 1, 2)) + [n])
        if f == "E":
            return {6: [2, 5, 6, 8, 9, 12], 7: [2, 6, 8, 10, 12, 14, 18],
                    8: [2, 8, 12, 14, 18, 20, 24, 30]}[n]
        if f == "F":
            return [2, 6, 8, 12]
        if f == "H":
            return {3: [2, 6, 10], 4: [2, 12, 20, 30]}[n]
        return sorted([2, self.p])

    def order(self) -> int:
        return prod(self.degrees())

    def coxeter_matrix(self) -> list[list[int]]:
        n, f = self.rank, self.family
        m = [[2] * n for _ in range(n)]
        for i in range(n):
            m[i][i] = 1

        def edge(i, j, v=3):
            m[i][j] = m[j][i] = v

        if f in "ABH":
            for i in range(n - 1):
                edge(i, i + 1)
            if f == "B":
                edge(n - 2, n - 1, 4)
            if f == "H":
                edge(0, 1, 5)
        elif f == "D":
            for i in range(n - 2):
                edge(i, i + 1)
            edge(n - 3, n - 1)
        elif f == "E":
            edge(0, 2)
            edge(2, 3)
            edge(1, 3)
            for i in range(3, n - 1):
                edge(i, i + 1)
        elif f == "F":
            edge(0, 1)
            edge(1, 2, 4)
            edge(2, 3)
        else:
            edge(0, 1, self.p)
        return m

    def node_classes(self) -> tuple[int, ...]:
        """Reflection class (1 or 2) of each simple node; class 1 holds node 1."""
        m = self.coxeter_matrix()
        n = self.rank
        cls = [0] * n
        cls[0] = 1
        stack = [0]
        while stack:
            i = stack.pop()
            for j in range(n):
                if cls[j] == 0 and m[i][j] % 2 == 1 and i != j:
                    cls[j] = cls[i]
                    stack.append(j)
        nxt = 2
        for i in range(n):
            if cls[i] == 0:
                cls[i] = nxt
                stack = [i]
                while stack:
                    a = stack.pop()
                    for j in range(n):
                        if cls[j] == 0 and m[a][j] % 2 == 1 and a != j:
                            cls[j] = nxt
                            stack.append(j)
                nxt += 1
        if self.swapped:
            cls = [3 - c for c in cls]
        return tuple(cls)

    def num_classes(self) -> int:
        return len(set(self.node_classes()))

    def unswapped(self) -> CoxeterLabel:
        return CoxeterLabel(self.family, self.rank, self.p)

    def __str__(self):
        return self.name


def _diagram_symmetries(label: CoxeterLabel) -> list[list[int]]:
    """Node permutations to try when canonicalizing class labels."""
    n = label.rank
    ident = list(range(n))
    if label.family == "F" or (label.family == "I" and label.p % 2 == 0) or (label.family == "B" and n == 2):
        return [ident, ident[::-1]]
    return [ident]


def canonical_label(label: CoxeterLabel) -> CoxeterLabel:
    """Drop the swap flag and rename I2(3), I2(4) to A2, B2 (same Coxeter system)."""
    if label.family == "I" and label.p == 3:
        return CoxeterLabel("A", 2)
    if label.family == "I" and label.p == 4:
        return CoxeterLabel("B", 2)
    return label.unswapped()


@dataclass(frozen=True, order=True)
class Factor:
    """An irreducible factor together with the ambient class of each node."""

    label: CoxeterLabel
    classes: tuple[int, ...]

    @classmethod
    def canonical(cls, label: CoxeterLabel, classes) -> Factor:
        classes = tuple(classes)
        label = canonical_label(label)
        best = min(tuple(classes[i] for i in perm) for perm in _diagram_symmetries(label))
        return cls(label, best)

    @property
    def name(self) -> str:
        return self.label.name

    def class_set(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.classes)))


@dataclass(frozen=True)
class CoxeterType:
    """A possibly reducible Coxeter type: a sorted multiset of labelled factors."""

    factors: tuple[Factor, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(sorted(self.factors)))

    @classmethod
    def of(cls, *labels: CoxeterLabel) -> CoxeterType:
        return cls(tuple(Factor.canonical(lb, lb.node_classes()) for lb in labels))

    @property
    def rank(self) -> int:
        return sum(f.label.rank for f in self.factors)

    def degrees(self) -> list[int]:
        return sorted(d for f in self.factors for d in f.label.degrees())

    def order(self) -> int:
        return prod(f.label.order() for f in self.factors)

    @property
    def is_irreducible(self) -> bool:
        return len(self.factors) == 1

    @property
    def labels(self) -> tuple[CoxeterLabel, ...]:
        return tuple(f.label for f in self.factors)

    @property
    def name(self) -> str:
        if not self.factors:
            return "1"
        return "x".join(f.name for f in self.factors)

    def class_name(self) -> str:
        """Name with ambient reflection classes, e.g. ``A1[1]xA1[2]`` or ``B3[112]``.

        A factor meeting both classes lists the class of each of its nodes.
        """
        if not self.factors:
            return "1"
        parts = []
        for f in self.factors:
            cs = f.class_set()
            tag = str(cs[0]) if len(cs) == 1 else "".join(str(c) for c in f.classes)
            parts.append(f"{f.name}[{tag}]")
        return "x".join(parts)

    def class_count(self, cls_id: int) -> int:
        return sum(f.classes.count(cls_id) for f in self.factors)

    def __str__(self):
        return self.name


def parse_label(text: str) -> CoxeterLabel:
    """Parse one irreducible type: ``A3``, ``B4``, ``I2:8``, ``I2(8)``, ``G2``, ``H3``.

    ``G2`` is read as ``I2(6)`` and ``D3`` as ``A3``. A trailing ``~`` swaps
    the two class names.
    """
    s = text.strip().upper().replace(" ", "")
    swapped = s.endswith("~")
    core = s.rstrip("~")
    if core == "G2":
        return CoxeterLabel("I", 2, 6, swapped)
    m = re.match(r"^I2?[:(](\d+)\)?$", core)
    if m:
        return CoxeterLabel("I", 2, int(m.group(1)), swapped)
    m = re.match(r"^([ABDEFH])(\d+)$", core)
    if not m:
        raise UnknownTypeError(f"cannot parse Coxeter type {text!r}")
    fam, n = m.group(1), int(m.group(2))
    if fam == "D" and n == 3:
        return CoxeterLabel("A", 3, 0, swapped)
    return CoxeterLabel(fam, n, 0, swapped)


def parse_type(text: str) -> CoxeterType:
    """Parse a product such as ``A1xA2`` into a :class:`CoxeterType`."""
    parts = [p for p in re.split(r"[xX*×]", text.strip()) if p]
    if not parts:
        raise UnknownTypeError("empty type")
    return CoxeterType.of(*(parse_label(p) for p in parts))
