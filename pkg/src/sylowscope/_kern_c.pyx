# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled permutation kernels; mirrors the API of ``_kern_py``."""

import numpy as np

cimport numpy as cnp

from .errors import CapExceeded

cnp.import_array()

BACKEND = "cython"


def bfs_closure(gens, int degree, long cap):
    cdef const cnp.int32_t[:, :] gv = np.ascontiguousarray(gens, dtype=np.int32)
    cdef int k = gv.shape[0]
    cdef int d = degree
    cdef long alloc = 1024 if cap > 1024 else cap + 1
    cdef cnp.ndarray[cnp.int32_t, ndim=2] buf = np.empty((alloc, d), dtype=np.int32)
    cdef cnp.int32_t[:, :] bufv = buf
    cdef long n = 1, head = 0
    cdef int x, j
    cdef cnp.ndarray[cnp.int32_t, ndim=1] prod = np.empty(d, dtype=np.int32)
    cdef cnp.int32_t[:] pv = prod
    index = {}
    for x in range(d):
        bufv[0, x] = x
    index[buf[0].tobytes()] = 0
    if k == 0:
        return buf[:1].copy()
    while head < n:
        for j in range(k):
            for x in range(d):
                pv[x] = bufv[head, gv[j, x]]
            key = prod.tobytes()
            if key not in index:
                if n >= alloc:
                    alloc = alloc * 2
                    if alloc > cap + 1:
                        alloc = cap + 1 + k
                    buf = np.resize(buf, (alloc, d))
                    bufv = buf
                if n > cap:
                    raise CapExceeded(f"closure exceeded cap of {cap} elements")
                index[key] = n
                for x in range(d):
                    bufv[n, x] = pv[x]
                n += 1
                if n > cap:
                    raise CapExceeded(f"closure exceeded cap of {cap} elements")
        head += 1
    return buf[:n].copy()


def pack_keys(rows, cnp.ndarray[cnp.int64_t, ndim=1] base):
    cdef const cnp.int32_t[:, :] rv = rows
    cdef long m = rv.shape[0]
    cdef int nb = base.shape[0]
    cdef cnp.ndarray[cnp.int64_t, ndim=1] out = np.zeros(m, dtype=np.int64)
    cdef cnp.int64_t[:] outv = out
    cdef const cnp.int64_t[:] bv = base
    cdef long i
    cdef int t
    for i in range(m):
        for t in range(nb):
            outv[i] |= (<cnp.int64_t> rv[i, bv[t]]) << (12 * t)
    return out


def lookup_rows(rows, cnp.ndarray[cnp.int64_t, ndim=1] base,
                cnp.ndarray[cnp.int64_t, ndim=1] sorted_keys,
                cnp.ndarray[cnp.int64_t, ndim=1] perm):
    if rows.ndim == 1:
        rows = rows[None, :]
    cdef cnp.ndarray[cnp.int64_t, ndim=1] q = pack_keys(
        np.ascontiguousarray(rows, dtype=np.int32), base)
    cdef long m = q.shape[0]
    cdef long n = sorted_keys.shape[0]
    cdef cnp.ndarray[cnp.int64_t, ndim=1] out = np.empty(m, dtype=np.int64)
    cdef const cnp.int64_t[:] qv = q
    cdef const cnp.int64_t[:] kv = sorted_keys
    cdef const cnp.int64_t[:] pv = perm
    cdef cnp.int64_t[:] outv = out
    cdef long i, lo, hi, mid
    cdef cnp.int64_t key
    for i in range(m):
        key = qv[i]
        lo = 0
        hi = n
        while lo < hi:
            mid = (lo + hi) >> 1
            if kv[mid] < key:
                lo = mid + 1
            else:
                hi = mid
        outv[i] = pv[lo]
    return out


def row_orders(rows):
    cdef const cnp.int32_t[:, :] rv = np.ascontiguousarray(rows, dtype=np.int32)
    cdef long n = rv.shape[0]
    cdef int d = rv.shape[1]
    cdef cnp.ndarray[cnp.int64_t, ndim=1] out = np.empty(n, dtype=np.int64)
    cdef cnp.ndarray[cnp.uint8_t, ndim=1] seen = np.zeros(d, dtype=np.uint8)
    cdef cnp.int64_t[:] outv = out
    cdef cnp.uint8_t[:] sv = seen
    cdef long i, order, length, g
    cdef int start, p
    for i in range(n):
        for p in range(d):
            sv[p] = 0
        order = 1
        for start in range(d):
            if sv[start]:
                continue
            length = 0
            p = start
            while not sv[p]:
                sv[p] = 1
                p = rv[i, p]
                length += 1
            g = _gcd(order, length)
            order = order // g * length
        outv[i] = order
    return out


cdef inline long _gcd(long a, long b):
    cdef long t
    while b:
        t = a % b
        a = b
        b = t
    return a


def orbit_partition(maps):
    cdef const cnp.int64_t[:, :] mv = np.ascontiguousarray(maps, dtype=np.int64)
    cdef int k = mv.shape[0]
    cdef long n = mv.shape[1]
    cdef cnp.ndarray[cnp.int64_t, ndim=1] oid = np.full(n, -1, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] stack = np.empty(n, dtype=np.int64)
    cdef cnp.int64_t[:] ov = oid, sv = stack
    cdef long start, cur = 0, top, x, y
    cdef int j
    reps = []
    for start in range(n):
        if ov[start] >= 0:
            continue
        reps.append(start)
        ov[start] = cur
        top = 0
        sv[0] = start
        top = 1
        while top > 0:
            top -= 1
            x = sv[top]
            for j in range(k):
                y = mv[j, x]
                if ov[y] < 0:
                    ov[y] = cur
                    sv[top] = y
                    top += 1
        cur += 1
    return oid, np.array(reps, dtype=np.int64)
