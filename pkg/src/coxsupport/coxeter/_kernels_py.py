"""Pure-Python (numpy) fallback for the enumeration kernel."""

from __future__ import annotations

import numpy as np


def _keys(block: np.ndarray, rank: int, base: int) -> np.ndarray:
    key = np.zeros(block.shape[0], dtype=np.uint64)
    for j in range(rank - 1, -1, -1):
        key = key * np.uint64(base) + block[:, j].astype(np.uint64)
    return key


def bfs_elements(gens: np.ndarray, npos: int, cap: int):
    """All group elements as root permutations, in breadth-first (length) order.

    ``gens[i]`` is the simple reflection ``s_i`` acting on the ``2*npos`` root
    indices, simple roots first. An element is determined by the images of
    the simple roots, which gives a compact integer key. Returns the element
    table and the length of each element; raises ``OverflowError`` when more
    than ``cap`` elements turn up.
    """
    gens = np.ascontiguousarray(gens, dtype=np.int32)
    rank, width = gens.shape
    base = width
    layer = np.arange(width, dtype=np.int32)[None, :]
    seen = set(_keys(layer, rank, base).tolist())
    blocks = [layer]
    lengths = [np.zeros(1, dtype=np.int32)]
    total = 1
    ell = 0
    while layer.shape[0]:
        ell += 1
        cand = np.concatenate([layer[:, g] for g in gens])
        keys = _keys(cand, rank, base)
        keys, first = np.unique(keys, return_index=True)
        fresh = [i for k, i in zip(keys.tolist(), first.tolist()) if k not in seen]
        fresh.sort()
        layer = cand[fresh]
        seen.update(keys.tolist())
        total += layer.shape[0]
        if total > cap:
            raise OverflowError(total)
        if layer.shape[0]:
            blocks.append(layer)
            lengths.append(np.full(layer.shape[0], ell, dtype=np.int32))
    return np.concatenate(blocks), np.concatenate(lengths)
