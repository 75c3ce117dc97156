"""Pure numpy implementations of the hot permutation kernels.

Permutations are stored as int32 image arrays of a fixed degree; the product
``a * b`` means "apply ``b`` first, then ``a``", so its image array is
``a[b]``.  The compiled module ``_kern_c`` exports the same functions; either
backend can serve the whole package.
"""

from __future__ import annotations

import numpy as np

from .errors import CapExceeded

BACKEND = "python"


def bfs_closure(gens: np.ndarray, degree: int, cap: int) -> np.ndarray:
    """Enumerate the subgroup generated by ``gens`` in BFS order.

    The identity comes first; within a BFS round products are ordered by
    (frontier position, generator position), which fixes the enumeration
    order used for all tie-breaking downstream.
    """
    ident = np.arange(degree, dtype=np.int32)
    elems = [ident]
    index = {ident.tobytes(): 0}
    frontier = [ident]
    k = len(gens)
    while frontier and k:
        nxt = []
        for e in frontier:
            for g in gens:
                prod = e[g]
                key = prod.tobytes()
                if key not in index:
                    index[key] = len(elems)
                    elems.append(prod)
                    nxt.append(prod)
                    if len(elems) > cap:
                        raise CapExceeded(
                            f"closure exceeded cap of {cap} elements"
                        )
        frontier = nxt
    return np.array(elems, dtype=np.int32)


def lookup_rows(rows: np.ndarray, base: np.ndarray, sorted_keys: np.ndarray,
                perm: np.ndarray) -> np.ndarray:
    """Map permutation rows to element indices via packed base-image keys."""
    if rows.ndim == 1:
        rows = rows[None, :]
    q = pack_keys(rows, base)
    pos = np.searchsorted(sorted_keys, q)
    return perm[pos]


def pack_keys(rows: np.ndarray, base: np.ndarray) -> np.ndarray:
    """Pack the base-point images of each row into a single int64 key."""
    out = np.zeros(rows.shape[0], dtype=np.int64)
    for t, b in enumerate(base):
        out |= rows[:, b].astype(np.int64) << (12 * t)
    return out


def row_orders(rows: np.ndarray) -> np.ndarray:
    """Order of each permutation row (lcm of its cycle lengths)."""
    n, d = rows.shape
    out = np.empty(n, dtype=np.int64)
    for i in range(n):
        row = rows[i]
        seen = np.zeros(d, dtype=bool)
        order = 1
        for start in range(d):
            if seen[start]:
                continue
            length = 0
            p = start
            while not seen[p]:
                seen[p] = True
                p = row[p]
                length += 1
            order = order * length // np.gcd(order, length)
        out[i] = order
    return out


def orbit_partition(maps: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Partition {0..n-1} into orbits of the given self-maps.

    ``maps`` is (k, n); orbits are scanned in index order, so orbit ids are
    deterministic and the representative is the least index of the orbit.
    Returns (orbit_id per point, representative per orbit).
    """
    k, n = maps.shape
    oid = np.full(n, -1, dtype=np.int64)
    reps = []
    for start in range(n):
        if oid[start] >= 0:
            continue
        cur = len(reps)
        reps.append(start)
        oid[start] = cur
        stack = [start]
        while stack:
            x = stack.pop()
            for j in range(k):
                y = maps[j, x]
                if oid[y] < 0:
                    oid[y] = cur
                    stack.append(int(y))
    return oid, np.array(reps, dtype=np.int64)
