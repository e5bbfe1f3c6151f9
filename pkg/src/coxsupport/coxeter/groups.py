"""Element enumeration with length and class-length functions."""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import kernels
from .roots import RootSystemData, positive_roots
from .types import CoxeterLabel

DEFAULT_CAP = 100_000


class EnumerationRefused(RuntimeError):
    """The group is larger than the enumeration cap."""

    def __init__(self, label: CoxeterLabel, order: int, cap: int):
        self.label = label
        self.order = order
        self.cap = cap
        super().__init__(
            f"refusing to enumerate {label.name}: |W| = {order} exceeds the cap {cap} "
            f"(raise it with COXSUPPORT_ENUM_CAP or --cap)"
        )


def enum_cap(cap: int | None = None) -> int:
    if cap is not None:
        return int(cap)
    env = os.environ.get("COXSUPPORT_ENUM_CAP")
    return int(float(env)) if env else DEFAULT_CAP


@dataclass
class ElementTable:
    """Every element of W as a permutation of root indices, in length order.

    ``perms[e, k]`` is the index of ``w_e(root_k)``; indices at or above
    ``N`` are negative roots. ``l1``/``l2`` count inversions by class.
    """

    data: RootSystemData
    perms: np.ndarray
    length: np.ndarray
    l1: np.ndarray
    l2: np.ndarray

    def __len__(self):
        return self.perms.shape[0]

    def matrix(self, e: int):
        """Matrix of element ``e`` on the simple-root coordinates (columns are images)."""
        d = self.data
        cols = [d.root(int(self.perms[e, j])) for j in range(d.rank)]
        return [[cols[j][i] for j in range(d.rank)] for i in range(d.rank)]

    def longest(self) -> int:
        return int(np.argmax(self.length))


@lru_cache(maxsize=32)
def _table(label: CoxeterLabel, cap: int) -> ElementTable:
    order = label.order()
    if order > cap:
        raise EnumerationRefused(label, order, cap)
    data = positive_roots(label)
    perms, length = kernels.bfs_elements(data.perms, data.n_pos, cap)
    n = data.n_pos
    inv = perms[:, :n] >= n
    cls = np.asarray(data.classes)
    l1 = inv[:, cls == 1].sum(axis=1).astype(np.int32)
    l2 = inv[:, cls == 2].sum(axis=1).astype(np.int32)
    return ElementTable(data, perms, length, l1, l2)


def element_table(label: CoxeterLabel, cap: int | None = None) -> ElementTable:
    return _table(label, enum_cap(cap))


def enumerate_elements(label: CoxeterLabel, cap: int | None = None):
    """Yield ``(matrix, length, l1, l2)`` for every element, shortest first."""
    table = element_table(label, cap)
    for e in range(len(table)):
        yield table.matrix(e), int(table.length[e]), int(table.l1[e]), int(table.l2[e])
