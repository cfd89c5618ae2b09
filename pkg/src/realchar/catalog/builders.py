"""Permutation realizations of the named groups.

Matrix groups are converted to permutations at build time: linear groups act on
projective points (or nonzero vectors when the center must stay faithful),
unitary groups on isotropic points of the Hermitian form with Gram matrix
antidiag(1, 1, 1), and Sz(8) on the 65 points of the ovoid orbit of e4.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import reduce
from itertools import product

import numpy as np

from ..algebra import Field, gf, prime_power
from ..perm import PermGroup, direct_product, identity


@dataclass
class Built:
    """A built group plus designated normal subgroups on the same points."""

    group: PermGroup
    normal: dict[str, PermGroup] = field(default_factory=dict)
    # field automorphism acting on the points, when the family admits one
    frobenius: np.ndarray | None = None
    # for matrix families: the base simple group (for ".k" extensions)
    family: str = ""
    params: tuple = ()


# ------------------------------------------------------------------ basics

def symmetric(n: int) -> PermGroup:
    if n <= 1:
        return PermGroup([], max(n, 1))
    gens = [np.r_[1, 0, np.arange(2, n)], np.r_[np.arange(1, n), 0]]
    return PermGroup(gens if n > 2 else gens[:1], n)


def alternating(n: int) -> PermGroup:
    if n <= 2:
        return PermGroup([], max(n, 1))
    gens = []
    for i in range(n - 2):
        p = identity(n)
        p[[i, i + 1, i + 2]] = [i + 1, i + 2, i]
        gens.append(p)
    return PermGroup(gens, n)


def cyclic(n: int) -> PermGroup:
    if n == 1:
        return PermGroup([], 1)
    return PermGroup([np.r_[np.arange(1, n), 0]], n)


def dihedral(order: int) -> PermGroup:
    """Dihedral group of the given order (order = 2m) acting on m points."""
    m = order // 2
    if order % 2 or m < 1:
        raise ValueError("dihedral order must be even")
    if m <= 2:
        # D2 = C2, D4 = C2 x C2 (regular/product realizations)
        return cyclic(2) if m == 1 else direct_product(cyclic(2), cyclic(2))
    rot = np.r_[np.arange(1, m), 0]
    ref = (-np.arange(m)) % m
    return PermGroup([rot, ref], m)


# ---------------------------------------------------------- field helpers

def _matvec(F: Field, M, v):
    out = []
    for row in M:
        s = 0
        for a, b in zip(row, v):
            if a and b:
                s = F.add(s, F.mul(a, b))
        out.append(s)
    return tuple(out)


def _matmul(F: Field, A, B):
    n = len(A)
    return [[reduce(F.add, (F.mul(A[i][k], B[k][j]) for k in range(n)), 0) for j in range(n)]
            for i in range(n)]


def _normalize(F: Field, v):
    for c in v:
        if c:
            inv = F.inv(c)
            return tuple(F.mul(inv, x) for x in v)
    raise ValueError("zero vector")


def projective_points(F: Field, d: int) -> list[tuple[int, ...]]:
    pts = []
    for v in product(range(F.q), repeat=d):
        if any(v) and v[next(i for i, c in enumerate(v) if c)] == 1:
            pts.append(v)
    return sorted(pts)


def _det(F: Field, M) -> int:
    n = len(M)
    A = [row[:] for row in M]
    det = 1
    for c in range(n):
        piv = next((r for r in range(c, n) if A[r][c]), None)
        if piv is None:
            return 0
        if piv != c:
            A[c], A[piv] = A[piv], A[c]
            det = F.neg(det)
        det = F.mul(det, A[c][c])
        inv = F.inv(A[c][c])
        for r in range(c + 1, n):
            if A[r][c]:
                f = F.mul(A[r][c], inv)
                A[r] = [F.sub(x, F.mul(f, y)) for x, y in zip(A[r], A[c])]
    return det


def _act(F: Field, mats, points, projective=True):
    index = {p: i for i, p in enumerate(points)}
    perms = []
    for M in mats:
        if projective:
            perms.append(np.array([index[_normalize(F, _matvec(F, M, p))] for p in points]))
        else:
            perms.append(np.array([index[_matvec(F, M, p)] for p in points]))
    return perms


def _frobenius_perm(F: Field, points, times: int = 1):
    index = {p: i for i, p in enumerate(points)}
    return np.array([index[tuple(F.frobenius(x, times) for x in p)] for p in points])


def _greedy(perms, degree, target_order=None):
    """Deterministically drop redundant generators."""
    chosen: list[np.ndarray] = []
    G = PermGroup([], degree)
    for p in perms:
        if G.contains(p):
            continue
        chosen.append(p)
        G = PermGroup(chosen, degree)
        if target_order is not None and G.order == target_order:
            break
    return G


def _transvections(F: Field, d: int):
    basis = [F.exp[i] for i in range(F.k)] if F.q > 2 else [1]
    mats = []
    for i in range(d):
        for j in range(d):
            if i == j:
                continue
            for a in basis:
                M = [[1 if r == c else 0 for c in range(d)] for r in range(d)]
                M[i][j] = a
                mats.append(M)
    return mats


# ----------------------------------------------------------- order formulas

def order_sl(d: int, q: int) -> int:
    return q ** (d * (d - 1) // 2) * math.prod(q**i - 1 for i in range(2, d + 1))


def order_psl(d: int, q: int) -> int:
    return order_sl(d, q) // math.gcd(d, q - 1)


def order_psu3(q: int) -> int:
    return q**3 * (q**3 + 1) * (q**2 - 1) // math.gcd(3, q + 1)


def order_sz(q: int) -> int:
    return q**2 * (q**2 + 1) * (q - 1)


# ---------------------------------------------------------------- families

def psl(d: int, q: int) -> Built:
    F = gf(q)
    pts = projective_points(F, d)
    target = order_psl(d, q)
    G = _greedy(_act(F, _transvections(F, d), pts), len(pts), target)
    assert G.order == target, (d, q, G.order, target)
    G.name = f"PSL({d},{q})"
    return Built(G, frobenius=_frobenius_perm(F, pts) if F.k > 1 else None,
                 family="PSL", params=(d, q))


def sl(d: int, q: int) -> Built:
    if math.gcd(d, q - 1) == 1:
        b = psl(d, q)
        b.group.name = f"SL({d},{q})"
        return b
    F = gf(q)
    vecs = [v for v in product(range(F.q), repeat=d) if any(v)]
    target = order_sl(d, q)
    G = _greedy(_act(F, _transvections(F, d), vecs, projective=False), len(vecs), target)
    assert G.order == target
    G.name = f"SL({d},{q})"
    return Built(G, family="SL", params=(d, q))


def pgl(d: int, q: int) -> Built:
    F = gf(q)
    pts = projective_points(F, d)
    mats = _transvections(F, d)
    D = [[F.generator if (r == c == 0) else (1 if r == c else 0) for c in range(d)] for r in range(d)]
    target = order_sl(d, q)
    G = _greedy(_act(F, [D] + mats, pts), len(pts), target)
    assert G.order == target
    G.name = f"PGL({d},{q})"
    return Built(G, frobenius=_frobenius_perm(F, pts) if F.k > 1 else None,
                 family="PGL", params=(d, q))


def _unitary_ok(F: Field, q: int, M) -> bool:
    # M^T J conj(M) == J with J = antidiag(1,1,1)
    Mb = [[F.pow(x, q) for x in row] for row in M]
    MT = [list(r) for r in zip(*M)]
    J = [[0, 0, 1], [0, 1, 0], [1, 0, 0]]
    return _matmul(F, _matmul(F, MT, J), Mb) == J and _det(F, M) == 1


def psu3(q: int) -> Built:
    F = gf(q * q)
    hform = lambda v: reduce(F.add, (F.mul(v[i], F.pow(v[2 - i], q)) for i in range(3)), 0)
    pts = [p for p in projective_points(F, 3) if hform(p) == 0]
    assert len(pts) == q**3 + 1
    mats = []
    # unipotent radical, torus, and the Weyl element
    for a, b in product(range(F.q), repeat=2):
        M = [[1, a, b], [0, 1, F.neg(F.pow(a, q))], [0, 0, 1]]
        if (a or b) and _unitary_ok(F, q, M):
            mats.append(M)
    for x in range(1, F.q):
        M = [[x, 0, 0], [0, F.mul(F.pow(x, q), F.inv(x)), 0], [0, 0, F.inv(F.pow(x, q))]]
        if _unitary_ok(F, q, M):
            mats.append(M)
    W = [[0, 0, 1], [0, F.neg(1), 0], [1, 0, 0]]
    assert _unitary_ok(F, q, W)
    mats.insert(0, W)
    target = order_psu3(q)
    G = _greedy(_act(F, mats, pts), len(pts), target)
    assert G.order == target, (q, G.order, target)
    G.name = f"PSU(3,{q})"
    return Built(G, frobenius=_frobenius_perm(F, pts), family="PSU", params=(3, q))


def suzuki(q: int) -> Built:
    pp = prime_power(q)
    if pp is None or pp[0] != 2 or pp[1] % 2 == 0 or q < 8:
        raise ValueError("Sz(q) needs q = 2^(2m+1) >= 8")
    F = gf(q)
    m = (pp[1] - 1) // 2
    th = lambda x: F.pow(x, 2 ** (m + 1))
    A, M_ = F.add, F.mul

    def S(a, b):
        r3 = [A(A(M_(M_(a, a), th(a)), M_(a, b)), th(b)), A(M_(a, th(a)), b), a, 1]
        return [[1, 0, 0, 0], [a, 1, 0, 0], [b, th(a), 1, 0], r3]

    e = 2**m
    lam = F.generator
    D = [[F.pow(lam, 1 + e), 0, 0, 0], [0, F.pow(lam, e), 0, 0],
         [0, 0, F.pow(lam, -e), 0], [0, 0, 0, F.pow(lam, -1 - e)]]
    T = [[0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0], [1, 0, 0, 0]]
    mats = [S(1, 0), S(0, 1), D, T]
    start = (0, 0, 0, 1)
    pts, seen = [start], {start}
    for p in pts:
        for Mx in mats:
            v = _normalize(F, _matvec(F, Mx, p))
            if v not in seen:
                seen.add(v)
                pts.append(v)
    pts.sort()
    G = PermGroup(_act(F, mats, pts), len(pts))
    assert G.order == order_sz(q)
    G.name = f"Sz({q})"
    return Built(G, frobenius=_frobenius_perm(F, pts), family="Sz", params=(q,))


# ------------------------------------------------------------- extensions

def field_extension(b: Built, k: int) -> Built:
    """Extend by the field automorphisms of order k acting on the points."""
    fam, params = b.family, b.params
    q = params[-1]
    p, nu = prime_power(q)
    if fam == "PSU":
        nu *= 2
    if b.frobenius is None or nu % k:
        raise ValueError(f"no field automorphism of order {k}")
    fr = b.frobenius
    step = nu // k
    phi = identity(len(fr))
    for _ in range(step):
        phi = fr[phi]
    G = PermGroup(list(b.group.generators) + [phi], b.group.degree)
    G.name = f"{b.group.name}.{k}"
    return Built(G, normal={"base": b.group}, family=fam + "ext", params=params)


def extend_by_generator(b: Built, extra: np.ndarray, k: int) -> Built:
    G = PermGroup(list(b.group.generators) + [extra], b.group.degree)
    if G.order != b.group.order * k:
        raise ValueError("extension has unexpected order")
    G.name = f"{b.group.name}.{k}"
    return Built(G, normal={"base": b.group})
