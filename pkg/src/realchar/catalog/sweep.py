"""Breadth sample of groups of order at most 100.

Not every group of order <= 100 is here. The sample covers all abelian groups,
dihedral and dicyclic groups, every split metacyclic C_m : C_n with m*n <= 100,
affine groups, and a list of small products and named groups (A4, S4, SL(2,3),
A5, ...). Groups without a descriptor are realized by their regular or affine
permutation action.
"""

from __future__ import annotations

import math
from functools import lru_cache
from itertools import product

import numpy as np

from ..algebra import factorint, gf, multiplicative_order
from ..perm import PermGroup
from .registry import build_group

SWEEP_MAX_ORDER = 100


def _partitions(n: int, largest: int | None = None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in _partitions(n - k, k):
            yield (k,) + rest


def abelian_descriptors(n: int) -> list[str]:
    per_prime = []
    for p, e in sorted(factorint(n).items()):
        per_prime.append([[p**k for k in part] for part in _partitions(e)])
    out = []
    for choice in product(*per_prime):
        factors = sorted((x for part in choice for x in part), reverse=True)
        out.append(" x ".join(f"C{x}" for x in factors) if factors else "C1")
    return out


def _regular(elements, mul) -> PermGroup:
    """Right regular representation; generators = all elements (then reduced)."""
    index = {e: i for i, e in enumerate(elements)}
    perms = [np.array([index[mul(x, g)] for x in elements]) for g in elements]
    chosen, G = [], PermGroup([], len(elements))
    for p in perms:
        if not G.contains(p):
            chosen.append(p)
            G = PermGroup(chosen, len(elements))
    return G


def semidirect_cyclic(m: int, n: int, r: int) -> PermGroup:
    """C_m : C_n with the generator of C_n acting by x -> r x."""
    els = [(a, b) for b in range(n) for a in range(m)]
    return _regular(els, lambda x, y: ((x[0] + pow(r, x[1], m) * y[0]) % m, (x[1] + y[1]) % n))


def dicyclic(order: int) -> PermGroup:
    n = order // 4
    els = [(k, j) for j in range(2) for k in range(2 * n)]

    def mul(x, y):
        (k1, j1), (k2, j2) = x, y
        k2 = -k2 if j1 else k2          # x a^k = a^-k x
        k = k1 + k2 + (n if j1 and j2 else 0)
        return (k % (2 * n), (j1 + j2) % 2)

    return _regular(els, mul)


def affine(q: int, mult_order: int | None = None) -> PermGroup:
    """x -> a x + b over GF(q), a in the subgroup of order mult_order."""
    F = gf(q)
    mult_order = mult_order or q - 1
    a = F.pow(F.generator, (q - 1) // mult_order)
    gens = [np.array([F.mul(a, x) for x in range(q)])]
    gens += [np.array([F.add(x, F.exp[i]) for x in range(q)]) for i in range(F.k)]
    return PermGroup(gens, q)


def heisenberg(p: int) -> PermGroup:
    """Upper unitriangular 3x3 matrices over GF(p), acting on column vectors."""
    vecs = list(product(range(p), repeat=3))
    index = {v: i for i, v in enumerate(vecs)}

    def perm(i, j):
        out = []
        for v in vecs:
            w = list(v)
            w[i] = (w[i] + w[j]) % p
            out.append(index[tuple(w)])
        return np.array(out)

    return PermGroup([perm(0, 1), perm(1, 2)], len(vecs))


def _sl23() -> PermGroup:
    from .registry import build
    return build("SL(2,3)").group


NAMED = [
    "A4", "S4", "A5", "SL(2,3)", "C2 wr C2", "C3 wr C2", "S3 wr C2", "C2 wr C3",
    "A4 x C2", "A4 x C3", "A4 x C4", "A4 x C5", "A4 x C6", "A4 x C7", "A4 x C8",
    "A4 x C2 x C2", "A4 x S3", "S4 x C2", "S4 x C3", "S4 x C4", "S4 x C2 x C2",
    "SL(2,3) x C2", "SL(2,3) x C3", "SL(2,3) x C4", "S3 x S3", "S3 x S3 x C2",
    "S3 x D10", "S3 x C5", "D8 x C3", "D8 x C2", "D8 x C5", "D8 x C9", "S3 x A4",
    "D10 x D10", "D8 x D8", "S3 x C3", "S3 x C2 x C2 x C2", "D8 x S3",
    "PGL(2,3)", "GL(2,3)", "S3 wr C2", "C3 x C3 x S3",
]


def _named_group(name: str) -> PermGroup:
    if name == "GL(2,3)":
        # GL(2,3) on the 8 nonzero vectors of GF(3)^2
        vecs = [v for v in product(range(3), repeat=2) if any(v)]
        index = {v: i for i, v in enumerate(vecs)}
        mats = [((1, 1), (0, 1)), ((0, 1), (1, 0)), ((2, 0), (0, 1))]
        gens = [np.array([index[tuple(sum(M[i][k] * v[k] for k in range(2)) % 3
                                      for i in range(2))] for v in vecs]) for M in mats]
        return PermGroup(gens, 8)
    return build_group(name)


def _metacyclic_specs():
    for m in range(3, SWEEP_MAX_ORDER // 2 + 1):
        for n in range(2, SWEEP_MAX_ORDER // m + 1):
            seen = set()
            for r in range(2, m):
                if math.gcd(r, m) != 1 or pow(r, n, m) != 1:
                    continue
                span = frozenset(pow(r, k, m) for k in range(multiplicative_order(r, m)))
                if span in seen:
                    continue
                seen.add(span)
                yield m, n, r


@lru_cache(maxsize=1)
def sweep_groups() -> tuple[tuple[str, PermGroup], ...]:
    from ..structure import fingerprint
    out: list[tuple[str, PermGroup]] = []
    for n in range(1, SWEEP_MAX_ORDER + 1):
        for d in abelian_descriptors(n):
            out.append((d, build_group(d)))
    for n in range(6, SWEEP_MAX_ORDER + 1, 2):
        out.append((f"D{n}", build_group(f"D{n}")))
    for n in range(8, SWEEP_MAX_ORDER + 1, 4):
        out.append((f"Dic{n}", dicyclic(n)))
    for m, n, r in _metacyclic_specs():
        out.append((f"C{m}:C{n}[{r}]", semidirect_cyclic(m, n, r)))
    for q in (4, 5, 7, 8, 9):
        out.append((f"AGL(1,{q})", affine(q)))
    out.append(("C2^4:C5", affine(16, 5)))
    out.append(("C2^4:C3", affine(16, 3)))
    out.append(("C3^2:C4", affine(9, 4)))
    out.append(("C2^3:C7", affine(8, 7)))
    out.append(("3^(1+2)", heisenberg(3)))
    for name in NAMED:
        G = _named_group(name)
        if G.order <= SWEEP_MAX_ORDER:
            out.append((name, G))
    # keep one representative per fingerprint; isomorphic duplicates add nothing
    uniq, seen = [], set()
    for name, G in out:
        fp = fingerprint(G)
        key = (fp, tuple(sorted(_class_shape(G))))
        if key in seen:
            continue
        seen.add(key)
        uniq.append((name, G))
    return tuple(uniq)


def _class_shape(G: PermGroup):
    from ..classes import conjugacy_classes
    C = conjugacy_classes(G)
    return [(o, s, r) for o, s, r in zip(C.orders, C.sizes, C.rational)]
