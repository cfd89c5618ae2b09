"""Pure numpy/scipy versions of the hot kernels in ``_kernels.pyx``.

Signatures and results match the compiled module exactly; the test suite runs
both against each other.
"""

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components


def label_components(n, succ_list):
    """Component labels of the graph with edges i -> succ[i] for each succ."""
    if not succ_list:
        return np.arange(n, dtype=np.int64)
    rows = np.concatenate([np.arange(n)] * len(succ_list))
    cols = np.concatenate([np.asarray(s, dtype=np.int64) for s in succ_list])
    graph = coo_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(n, n))
    _, labels = connected_components(graph, directed=True, connection="weak")
    # renumber by first occurrence so both backends agree
    _, first = np.unique(labels, return_index=True)
    order = np.argsort(np.argsort(first))
    return order[labels].astype(np.int64)


def lookup(keys_sorted, keys):
    idx = np.searchsorted(keys_sorted, keys)
    return np.minimum(idx, len(keys_sorted) - 1).astype(np.int64)


def conj_successor(X, g, ginv, base, radix, keys_sorted):
    """Index of g^-1 x g for every row x of X."""
    cols = X[:, ginv[base]]
    imgs = g[cols]
    keys = imgs.astype(np.int64) @ radix
    return lookup(keys_sorted, keys)


def pair_counts(z, xinv_base, radix, keys_sorted, class_of, r):
    """counts[a, b] = #{x : class(x) = a, class(x^-1 z) = b}."""
    keys = z[xinv_base].astype(np.int64) @ radix
    y = lookup(keys_sorted, keys)
    flat = class_of * r + class_of[y]
    return np.bincount(flat, minlength=r * r).reshape(r, r).astype(np.int64)


def rref_mod(M, p):
    """Reduced row echelon form over GF(p); returns (R, pivots)."""
    A = np.array(M, dtype=np.int64) % p
    rows, cols = A.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(A[r:, c])
        if len(nz) == 0:
            continue
        k = r + nz[0]
        if k != r:
            A[[r, k]] = A[[k, r]]
        A[r] = A[r] * pow(int(A[r, c]), -1, p) % p
        f = A[:, c].copy()
        f[r] = 0
        nzr = np.flatnonzero(f)
        if len(nzr):
            A[nzr] = (A[nzr] - np.outer(f[nzr], A[r])) % p
        pivots.append(c)
        r += 1
    return A[:r], pivots
