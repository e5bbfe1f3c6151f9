"""Elliptic and regular numbers, with a brute-force eigenvector search.

``m`` is elliptic when ``a_W(m)`` beats the a-count of every maximal
parabolic, and regular when it equals the number of codegrees ``d_i - 2``
divisible by ``m``. The oracle walks every element, finds those with a
primitive ``m``-th root of unity as an eigenvalue and checks, in exact
cyclotomic arithmetic, whether the eigenspace avoids every mirror and
whether the element fixes no nonzero vector.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import numpy as np

from .coxeter.groups import element_table
from .coxeter.parabolic import maximal_parabolics
from .coxeter.roots import positive_roots
from .coxeter.types import CoxeterLabel
from .exact.cyclo import CycloNum
from .exact.linalg import charpoly, identity, nullspace
from .exact.qsqrt5 import QSqrt5
from .poincare import a_count, as_type


def _check_m(m: int):
    if not isinstance(m, (int, np.integer)) or m < 2:
        raise ValueError("m must be an integer >= 2")


def codegrees(label: CoxeterLabel) -> list[int]:
    return [d - 2 for d in label.degrees()]


def is_elliptic_number(w, m: int) -> bool:
    _check_m(m)
    t = as_type(w)
    aw = a_count(t, m)
    return all(aw > a_count(p.ctype, m) for p in maximal_parabolics(t))


def is_regular_number(label: CoxeterLabel, m: int) -> bool:
    _check_m(m)
    return a_count(label, m) == sum(1 for d in codegrees(label) if d % m == 0)


def element_orders(perms: np.ndarray) -> np.ndarray:
    """Order of each permutation row."""
    n_el, n = perms.shape
    ident = np.arange(n)
    orders = np.zeros(n_el, dtype=np.int64)
    cur = perms.copy()
    k = 1
    while (orders == 0).any():
        done = (orders == 0) & (cur == ident).all(axis=1)
        orders[done] = k
        cur = np.take_along_axis(perms, cur, axis=1)
        k += 1
    return orders


@dataclass
class EigenReport:
    label: CoxeterLabel
    m: int
    with_eigenvalue: int = 0  # elements having a primitive m-th root as eigenvalue
    regular: int = 0  # ... with an eigenvector off every mirror
    regular_elliptic: int = 0  # ... that in addition fix no nonzero vector
    max_eigen_dim: int = 0  # largest eigenspace dimension among regular ones
    example: int | None = None  # element index of a regular elliptic one, if any

    @property
    def has_regular(self) -> bool:
        return self.regular > 0

    @property
    def has_regular_elliptic(self) -> bool:
        return self.regular_elliptic > 0

    def summary(self) -> str:
        return (
            f"{self.label.name}, m={self.m}: {self.with_eigenvalue} elements with eigenvalue, "
            f"{self.regular} regular, {self.regular_elliptic} regular elliptic, "
            f"max regular eigenspace dim {self.max_eigen_dim}"
        )


def _cyc(x) -> CycloNum:
    return CycloNum.coerce(x)


def _eval(coeffs, z: CycloNum) -> CycloNum:
    acc = CycloNum.rational(0)
    for c in reversed(coeffs):
        acc = acc * z + _cyc(c)
    return acc


def _is_rational_kind(data) -> bool:
    return data.kind == "rational"


def brute_force_search(label: CoxeterLabel, m: int, cap: int | None = None) -> EigenReport:
    """Exhaustive search for regular (elliptic) elements of eigenvalue order ``m``."""
    _check_m(m)
    table = element_table(label, cap)
    data = positive_roots(label)
    r = data.rank
    report = EigenReport(label, m)
    orders = element_orders(table.perms)
    # rational matrices: Galois conjugation moves zeta_m to every other primitive root
    ks = [1] if _is_rational_kind(data) else [k for k in range(1, m) if gcd(k, m) == 1]
    zetas = [CycloNum.zeta(m, k) for k in ks]
    # mirror functionals v -> (alpha, v) in simple-root coordinates
    units = identity(r)
    funcs = [[_cyc(data.inner(data.roots[k], units[j])) for j in range(r)] for k in range(data.n_pos)]
    ident = units
    cp_cache: dict = {}
    for e in np.nonzero(orders % m == 0)[0]:
        e = int(e)
        mat = table.matrix(e)
        key = tuple(tuple(_key(x) for x in row) for row in mat)
        cp = cp_cache.get(key)
        if cp is None:
            cp = charpoly(mat)
            cp_cache[key] = cp
        lams = [z for z in zetas if _eval(cp, z).is_zero()]
        if not lams:
            continue
        report.with_eigenvalue += 1
        elliptic = not _eval(cp, CycloNum.rational(1)).is_zero()
        best = 0
        for lam in lams:
            shifted = [[_cyc(x) - lam * ident[i][j] for j, x in enumerate(row)] for i, row in enumerate(mat)]
            basis = nullspace(shifted)
            if all(any(not _dot(f, v).is_zero() for v in basis) for f in funcs):
                best = max(best, len(basis))
        if best:
            report.regular += 1
            report.max_eigen_dim = max(report.max_eigen_dim, best)
            if elliptic:
                report.regular_elliptic += 1
                if report.example is None:
                    report.example = e
    return report


def _dot(f, v) -> CycloNum:
    acc = CycloNum.rational(0)
    for a, b in zip(f, v):
        acc = acc + a * b
    return acc


def _key(x):
    if isinstance(x, QSqrt5):
        return ("s", x.a, x.b)
    if isinstance(x, CycloNum):
        return ("c", x.n, x.coeffs)
    return x

