# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops: orbit labelling, class-pair counting, GF(p) row reduction."""

import numpy as np
cimport numpy as cnp

cnp.import_array()

ctypedef cnp.int64_t i64


cdef inline i64 _find(i64[::1] parent, i64 x) noexcept nogil:
    cdef i64 r = x
    while parent[r] != r:
        r = parent[r]
    while parent[x] != r:
        parent[x], x = r, parent[x]
    return r


def label_components(Py_ssize_t n, succ_list):
    cdef i64[::1] parent = np.arange(n, dtype=np.int64)
    cdef i64[::1] succ
    cdef Py_ssize_t i
    cdef i64 a, b
    for s in succ_list:
        succ = np.ascontiguousarray(s, dtype=np.int64)
        with nogil:
            for i in range(n):
                a = _find(parent, i)
                b = _find(parent, succ[i])
                if a != b:
                    if a < b:
                        parent[b] = a
                    else:
                        parent[a] = b
    out = np.empty(n, dtype=np.int64)
    cdef i64[::1] lab = out
    cdef i64[::1] seen = np.full(n, -1, dtype=np.int64)
    cdef i64 nxt = 0, root
    with nogil:
        for i in range(n):
            root = _find(parent, i)
            if seen[root] < 0:
                seen[root] = nxt
                nxt += 1
            lab[i] = seen[root]
    return out


cdef class _Index:
    """Sorted non-negative keys plus bucket starts on the top bits, so a search
    only touches a short, cache-friendly slice."""
    cdef const i64[::1] keys
    cdef i64[::1] starts
    cdef int shift
    cdef Py_ssize_t nb

    def __init__(self, keys_sorted):
        ks = np.ascontiguousarray(keys_sorted, dtype=np.int64)
        self.keys = ks
        n = ks.shape[0]
        nb = 1
        while nb < max(n // 4, 1):
            nb <<= 1
        top = int(ks[n - 1]) if n else 0
        self.shift = max(0, top.bit_length() - (nb.bit_length() - 1))
        self.nb = nb
        bounds = np.arange(nb, dtype=np.int64) << self.shift
        self.starts = np.append(np.searchsorted(ks, bounds), n).astype(np.int64)

    cdef inline i64 find(self, i64 k) noexcept nogil:
        cdef Py_ssize_t n = self.keys.shape[0], lo, hi, mid
        cdef i64 b = k >> self.shift
        if k < 0:
            return 0
        if b >= self.nb:
            return n - 1
        lo = self.starts[b]
        hi = self.starts[b + 1]
        while lo < hi:
            mid = (lo + hi) >> 1
            if self.keys[mid] < k:
                lo = mid + 1
            else:
                hi = mid
        if lo >= n:
            lo = n - 1
        return lo


def lookup(keys_sorted, keys):
    cdef _Index idx = _Index(keys_sorted)
    cdef const i64[::1] q = np.ascontiguousarray(keys, dtype=np.int64)
    out = np.empty(q.shape[0], dtype=np.int64)
    cdef i64[::1] o = out
    cdef Py_ssize_t i
    with nogil:
        for i in range(q.shape[0]):
            o[i] = idx.find(q[i])
    return out


def conj_successor(X, g, ginv, base, radix, keys_sorted):
    cdef Py_ssize_t N = X.shape[0], b = len(base), i, j
    cdef const i64[::1] gg = np.ascontiguousarray(g, dtype=np.int64)
    cdef const i64[::1] cols = np.ascontiguousarray(np.asarray(ginv)[np.asarray(base)], dtype=np.int64)
    cdef const i64[::1] rad = np.ascontiguousarray(radix, dtype=np.int64)
    cdef _Index idx = _Index(keys_sorted)
    cdef const i64[:, ::1] XB = np.ascontiguousarray(np.asarray(X)[:, np.asarray(cols)], dtype=np.int64)
    out = np.empty(N, dtype=np.int64)
    cdef i64[::1] o = out
    cdef i64 key
    with nogil:
        for i in range(N):
            key = 0
            for j in range(b):
                key += gg[XB[i, j]] * rad[j]
            o[i] = idx.find(key)
    return out


def pair_counts(z, xinv_base, radix, keys_sorted, class_of, Py_ssize_t r):
    cdef const i64[::1] zz = np.ascontiguousarray(z, dtype=np.int64)
    cdef const i64[:, ::1] XI = np.ascontiguousarray(xinv_base, dtype=np.int64)
    cdef const i64[::1] rad = np.ascontiguousarray(radix, dtype=np.int64)
    cdef _Index idx = _Index(keys_sorted)
    cdef const i64[::1] cl = np.ascontiguousarray(class_of, dtype=np.int64)
    counts = np.zeros((r, r), dtype=np.int64)
    cdef i64[:, ::1] c = counts
    cdef Py_ssize_t N = XI.shape[0], b = XI.shape[1], i, j
    cdef i64 key
    with nogil:
        for i in range(N):
            key = 0
            for j in range(b):
                key += zz[XI[i, j]] * rad[j]
            c[cl[i], cl[idx.find(key)]] += 1
    return counts


def rref_mod(M, i64 p):
    A_np = np.array(M, dtype=np.int64) % p
    cdef i64[:, ::1] A = A_np
    cdef Py_ssize_t rows = A.shape[0], cols = A.shape[1]
    cdef Py_ssize_t r = 0, c, k, i, j
    cdef i64 inv, f, t
    pivots = []
    for c in range(cols):
        if r == rows:
            break
        k = -1
        for i in range(r, rows):
            if A[i, c] != 0:
                k = i
                break
        if k < 0:
            continue
        if k != r:
            for j in range(cols):
                t = A[r, j]
                A[r, j] = A[k, j]
                A[k, j] = t
        inv = pow(int(A[r, c]), -1, p)
        with nogil:
            for j in range(cols):
                A[r, j] = (A[r, j] * inv) % p
            for i in range(rows):
                if i != r and A[i, c] != 0:
                    f = A[i, c]
                    for j in range(cols):
                        A[i, j] = (A[i, j] - f * A[r, j]) % p
                        if A[i, j] < 0:
                            A[i, j] += p
        pivots.append(c)
        r += 1
    return A_np[:r], pivots
