"""Compare the compiled and numpy element-enumeration kernels.

    python benchmarks/bench_kernels.py [--repeat N] [TYPE ...]

Both kernels must return identical arrays; the script stops if they differ.
"""

import argparse
import time

import numpy as np

from coxsupport.coxeter import _kernels_py, kernels
from coxsupport.coxeter.roots import positive_roots
from coxsupport.coxeter.types import parse_label

DEFAULT = ["B4", "D5", "F4", "H3", "A6", "B6", "H4", "E6"]


def best_of(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return best, out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("types", nargs="*", default=DEFAULT)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    try:
        from coxsupport.coxeter import _kernels as compiled
    except ImportError:
        compiled = None
    print(f"selected backend: {kernels.BACKEND}")
    if compiled is None:
        print("compiled kernel not built; timing the numpy kernel only")
    print(f"{'type':<8}{'|W|':>10}{'numpy s':>12}{'cython s':>12}{'speedup':>10}")
    for name in args.types:
        data = positive_roots(parse_label(name))
        cap = 10**6
        t_py, ref = best_of(lambda: _kernels_py.bfs_elements(data.perms, data.n_pos, cap), args.repeat)
        if compiled is not None:
            t_c, got = best_of(lambda: compiled.bfs_elements(data.perms, data.n_pos, cap), args.repeat)
            if not (np.array_equal(ref[0], got[0]) and np.array_equal(ref[1], got[1])):
                raise SystemExit(f"{name}: kernels disagree")
            print(f"{name:<8}{len(ref[0]):>10}{t_py:>12.4f}{t_c:>12.4f}{t_py / t_c:>9.1f}x")
        else:
            print(f"{name:<8}{len(ref[0]):>10}{t_py:>12.4f}{'-':>12}{'-':>10}")


if __name__ == "__main__":
    main()
