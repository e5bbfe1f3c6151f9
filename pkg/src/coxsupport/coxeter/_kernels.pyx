# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled breadth-first enumeration of a Coxeter group on its roots."""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport uint64_t
from libcpp.unordered_set cimport unordered_set

cnp.import_array()


def bfs_elements(gens, int npos, long cap):
    """Same contract as the numpy fallback: (elements, lengths) in BFS order."""
    cdef cnp.int32_t[:, ::1] g = np.ascontiguousarray(gens, dtype=np.int32)
    cdef int rank = g.shape[0]
    cdef int width = g.shape[1]
    cdef long capacity = 1024
    out = np.empty((capacity, width), dtype=np.int32)
    lens = np.empty(capacity, dtype=np.int32)
    cdef cnp.int32_t[:, ::1] o = out
    cdef cnp.int32_t[::1] L = lens
    cdef unordered_set[uint64_t] seen
    cdef long count = 1, start = 0, stop = 1, e, gi, a, j
    cdef uint64_t key
    cdef int ell = 0
    cdef cnp.int32_t[::1] tmp = np.empty(width, dtype=np.int32)

    for a in range(width):
        o[0, a] = a
    L[0] = 0
    key = 0
    for j in range(rank - 1, -1, -1):
        key = key * <uint64_t>width + <uint64_t>o[0, j]
    seen.insert(key)

    while start < stop:
        ell += 1
        for gi in range(rank):
            for e in range(start, stop):
                key = 0
                for j in range(rank - 1, -1, -1):
                    key = key * <uint64_t>width + <uint64_t>o[e, g[gi, j]]
                if seen.count(key):
                    continue
                seen.insert(key)
                if count >= cap:
                    raise OverflowError(count + 1)
                if count == capacity:
                    capacity *= 2
                    out = np.resize(out, (capacity, width))
                    lens = np.resize(lens, capacity)
                    o = out
                    L = lens
                for a in range(width):
                    o[count, a] = o[e, g[gi, a]]
                L[count] = ell
                count += 1
        start = stop
        stop = count
    return out[:count].copy(), lens[:count].copy()
