"""Exact row reduction over fields and integral domains.

Entries may be ints, Fractions, QSqrt5, CycloNum or UniPoly; all that is
needed is ring arithmetic plus a zero test.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .cyclo import CycloNum


def _is_zero(x) -> bool:
    return x == 0


def echelon_fraction_free(rows):
    """Division-free row echelon form.

    Eliminates with ``r_j <- p * r_j - a * r_i`` so no inverse is ever taken;
    this is valid over any integral domain, in particular over Z[zeta]. Rows
    of cyclotomic integers are divided by their integer content after each
    step to keep coefficients small.

    Returns ``(echelon_rows, pivot_columns)``.
    """
    rows = [list(r) for r in rows]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(rows)) if not _is_zero(rows[i][col])), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][col]
        for i in range(r + 1, len(rows)):
            a = rows[i][col]
            if _is_zero(a):
                continue
            rows[i] = _primitive([p * x - a * y for x, y in zip(rows[i], rows[r])])
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def _primitive(row):
    """Divide a row of integral cyclotomic numbers by its integer content."""
    g = 0
    for x in row:
        if isinstance(x, CycloNum):
            if not x.is_integral():
                return row
            for c in x.coeffs:
                g = gcd(g, c)
        elif isinstance(x, int):
            g = gcd(g, x)
        else:
            return row
        if g == 1:
            return row
    if g <= 1:
        return row
    return [x * Fraction(1, g) if isinstance(x, CycloNum) else x // g for x in row]


def reduce_against(echelon, pivots, row):
    """Reduce ``row`` by a fraction-free echelon basis; zero iff in the row space."""
    row = list(row)
    for er, col in zip(echelon, pivots):
        a = row[col]
        if _is_zero(a):
            continue
        p = er[col]
        row = _primitive([p * x - a * y for x, y in zip(row, er)])
    return row


def rank(rows) -> int:
    return len(echelon_fraction_free(rows)[0])


def solve_rank_field(rows) -> int:
    """Rank via ordinary Gaussian elimination with division (field entries)."""
    rows = [list(r) for r in rows]
    if not rows:
        return 0
    ncols = len(rows[0])
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(rows)) if not _is_zero(rows[i][col])), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][col] if not isinstance(rows[r][col], int) else Fraction(1, rows[r][col])
        pivot_row = [x * inv for x in rows[r]]
        rows[r] = pivot_row
        for i in range(r + 1, len(rows)):
            a = rows[i][col]
            if _is_zero(a):
                continue
            rows[i] = [x - a * y for x, y in zip(rows[i], pivot_row)]
        r += 1
        if r == len(rows):
            break
    return r


def mat_mul(a, b):
    """Dense product of list-of-lists matrices (sparse-aware on zeros of ``a``)."""
    if not a or not b:
        return [[0] * (len(b[0]) if b else 0) for _ in a]
    m = len(b[0])
    out = []
    for row in a:
        acc = [0] * m
        for k, x in enumerate(row):
            if _is_zero(x):
                continue
            brow = b[k]
            for j in range(m):
                y = brow[j]
                if not _is_zero(y):
                    acc[j] = acc[j] + x * y
        out.append(acc)
    return out


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a, s):
    return [[s * x for x in row] for row in a]


def identity(n: int):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def inverse(a):
    """Inverse of a square matrix over a field (Gauss-Jordan)."""
    n = len(a)
    rows = [list(r) + [int(i == j) for j in range(n)] for i, r in enumerate(a)]
    for col in range(n):
        piv = next((i for i in range(col, n) if not _is_zero(rows[i][col])), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        rows[col], rows[piv] = rows[piv], rows[col]
        p = rows[col][col]
        inv = Fraction(1, p) if isinstance(p, int) else 1 / p
        rows[col] = [x * inv for x in rows[col]]
        for i in range(n):
            if i != col and not _is_zero(rows[i][col]):
                k = rows[i][col]
                rows[i] = [x - k * y for x, y in zip(rows[i], rows[col])]
    return [[_norm(x) for x in r[n:]] for r in rows]


def _norm(x):
    if type(x) is Fraction and x.denominator == 1:
        return x.numerator
    return x


def nullspace(rows):
    """Basis of ``{v : rows @ v = 0}`` over a field, via reduced echelon form."""
    rows = [list(r) for r in rows]
    ncols = len(rows[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(rows)) if not _is_zero(rows[i][col])), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][col]
        inv = Fraction(1, p) if isinstance(p, int) else 1 / p
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and not _is_zero(rows[i][col]):
                k = rows[i][col]
                rows[i] = [x - k * y for x, y in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for i, pc in enumerate(pivots):
            v[pc] = -rows[i][f]
        basis.append(v)
    return basis


def charpoly(a):
    """Coefficients ``[c_0, ..., c_n]`` of ``det(t I - a)`` (Faddeev-LeVerrier)."""
    n = len(a)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    m = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        m = mat_mul(a, m) if k > 1 else [[0] * n for _ in range(n)]
        c_prev = coeffs[n - k + 1]
        for i in range(n):
            m[i][i] = m[i][i] + c_prev
        am = mat_mul(a, m)
        tr = 0
        for i in range(n):
            tr = tr + am[i][i]
        coeffs[n - k] = _norm(-tr * Fraction(1, k)) if isinstance(tr, (int, Fraction)) else -tr / k
    return coeffs
