"""Permutation groups via deterministic Schreier-Sims.

Conventions
-----------
A permutation of degree n is an int array ``p`` with ``p[i]`` the image of
point ``i``.  Products act left to right: ``(a * b)[i] = b[a[i]]``, which in
numpy is ``b[a]``.  Conjugation is ``x ** g = g^-1 x g``.

Every group's stabilizer chain is built on its *canonical base*: each base
point is the smallest point moved by the stabilizer of the previous ones.  With
that base, comparing base images compares whole image arrays
lexicographically, which gives the canonical element ordering used by the class
enumeration.
"""

from __future__ import annotations

import math
import random
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

import numpy as np

from . import kernels

DEGREE_CAP = 1024
ORDER_CAP = 2 * 10**8
ENUM_CAP = 2 * 10**6
INDEX_CAP = 10**5


class PermError(ValueError):
    pass


class CapError(RuntimeError):
    """A desk-scale resource cap was exceeded."""


# ------------------------------------------------------------ permutations

def as_perm(p, degree: int | None = None) -> np.ndarray:
    a = np.asarray(p.images if isinstance(p, Permutation) else p, dtype=np.intp)
    if a.ndim != 1:
        raise PermError("permutation must be one-dimensional")
    if degree is not None and len(a) != degree:
        if len(a) > degree:
            raise PermError(f"degree mismatch: {len(a)} vs {degree}")
        a = np.concatenate([a, np.arange(len(a), degree)])
    n = len(a)
    if n and (a.min() < 0 or a.max() >= n or np.bincount(a, minlength=n).max() != 1):
        raise PermError("not a bijection on {0..n-1}")
    return a


def identity(n: int) -> np.ndarray:
    return np.arange(n, dtype=np.intp)


def inverse(p: np.ndarray) -> np.ndarray:
    inv = np.empty_like(p)
    inv[p] = np.arange(len(p), dtype=p.dtype)
    return inv


def mul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return b[a]


def conj(x: np.ndarray, g: np.ndarray) -> np.ndarray:
    """g^-1 x g."""
    return g[x[inverse(g)]]


def is_identity(p: np.ndarray) -> bool:
    return bool(np.all(p == np.arange(len(p))))


def cycles(p: Sequence[int]) -> list[tuple[int, ...]]:
    seen, out = set(), []
    for i in range(len(p)):
        if i in seen:
            continue
        cyc = [i]
        seen.add(i)
        j = int(p[i])
        while j != i:
            cyc.append(j)
            seen.add(j)
            j = int(p[j])
        out.append(tuple(cyc))
    return out


def perm_order(p: Sequence[int]) -> int:
    return math.lcm(*(len(c) for c in cycles(p))) if len(p) else 1


def power(p: np.ndarray, k: int) -> np.ndarray:
    if k < 0:
        p, k = inverse(p), -k
    out = identity(len(p))
    base = p
    while k:
        if k & 1:
            out = base[out]
        base = base[base]
        k >>= 1
    return out


def from_cycles(cyc: Iterable[Sequence[int]], degree: int) -> np.ndarray:
    p = identity(degree)
    for c in cyc:
        for a, b in zip(c, list(c[1:]) + [c[0]]):
            p[a] = b
    return as_perm(p)


def fmt_cycles(p: Sequence[int]) -> str:
    parts = ["(" + " ".join(map(str, c)) + ")" for c in cycles(p) if len(c) > 1]
    return "".join(parts) or "()"


@dataclass(frozen=True)
class Permutation:
    """Hashable, immutable permutation for user-facing code."""

    images: tuple[int, ...]

    @classmethod
    def from_cycles(cls, cyc, degree):
        return cls(tuple(int(x) for x in from_cycles(cyc, degree)))

    @property
    def degree(self):
        return len(self.images)

    def __mul__(self, other):
        return Permutation(tuple(other.images[i] for i in self.images))

    def inverse(self):
        return Permutation(tuple(int(x) for x in inverse(np.asarray(self.images))))

    def order(self):
        return perm_order(self.images)

    def __str__(self):
        return fmt_cycles(self.images)


# ----------------------------------------------------------- words

def _word_inv(w: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(-x for x in reversed(w))


def eval_word(word: Sequence[int], gens: Sequence[np.ndarray], degree: int) -> np.ndarray:
    """Evaluate a word; letter ``i+1`` is generator i, ``-(i+1)`` its inverse."""
    out = identity(degree)
    invs: dict[int, np.ndarray] = {}
    for letter in word:
        g = gens[abs(letter) - 1]
        if letter < 0:
            g = invs.setdefault(letter, inverse(g))
        out = g[out]
    return out


# ------------------------------------------------------ stabilizer chain

class _Level:
    __slots__ = ("point", "gens", "words", "trans", "twords")

    def __init__(self, point):
        self.point = point
        self.gens: list[np.ndarray] = []
        self.words: list[tuple] = []
        self.trans: dict[int, np.ndarray] = {}
        self.twords: dict[int, tuple] = {}


def _orbit(level: _Level, n: int, track: bool):
    """Breadth-first orbit with explicit transversal elements."""
    b = level.point
    trans = {b: identity(n)}
    twords = {b: ()} if track else {}
    queue = [b]
    for x in queue:
        u = trans[x]
        for gi, g in enumerate(level.gens):
            y = int(g[x])
            if y not in trans:
                trans[y] = g[u]
                if track:
                    twords[y] = twords[x] + level.words[gi]
                queue.append(y)
    level.trans, level.twords = trans, twords


def _schreier_sims(gens, n, base_prefix, track, gen_words=None):
    """Deterministic Schreier-Sims; returns list of levels."""
    if gen_words is None:
        gen_words = [(i + 1,) for i in range(len(gens))]
    keep = [i for i, g in enumerate(gens) if not is_identity(g)]
    gens, gen_words = [gens[i] for i in keep], [gen_words[i] for i in keep]
    base = list(base_prefix)
    for g in gens:
        if all(g[b] == b for b in base):
            base.append(int(np.flatnonzero(g != np.arange(n))[0]))
    levels = [_Level(b) for b in base]

    def fixes_prefix(g, k):
        return all(g[levels[j].point] == levels[j].point for j in range(k))

    for g, w in zip(gens, gen_words):
        for k, lev in enumerate(levels):
            if fixes_prefix(g, k):
                lev.gens.append(g)
                lev.words.append(w)
    for lev in levels:
        _orbit(lev, n, track)

    def sift(h, hw, start):
        for j in range(start, len(levels)):
            lev = levels[j]
            y = int(h[lev.point])
            u = lev.trans.get(y)
            if u is None:
                return h, hw, j
            h = inverse(u)[h]
            if track:
                hw = hw + _word_inv(lev.twords[y])
        return h, hw, len(levels)

    i = len(levels) - 1
    while i >= 0:
        lev = levels[i]
        restart = False
        for x, u in list(lev.trans.items()):
            for gi, s in enumerate(lev.gens):
                y = int(s[x])
                # schreier generator u s u_y^-1
                sg = inverse(lev.trans[y])[s[u]]
                if is_identity(sg):
                    continue
                sw = (lev.twords[x] + lev.words[gi] + _word_inv(lev.twords[y])) if track else ()
                h, hw, j = sift(sg, sw, i + 1)
                if not is_identity(h):
                    if j == len(levels):
                        moved = np.flatnonzero(h != np.arange(n))
                        levels.append(_Level(int(moved[0])))
                    for k in range(i + 1, j + 1):
                        levels[k].gens.append(h)
                        levels[k].words.append(hw)
                        _orbit(levels[k], n, track)
                    i = j
                    restart = True
                    break
            if restart:
                break
        if not restart:
            i -= 1
    return levels


class PermGroup:
    """Permutation group with a stabilizer chain on its canonical base."""

    def __init__(self, generators, degree: int | None = None, *, witness: bool = False,
                 base_prefix: Sequence[int] = (), name: str | None = None):
        gens = list(generators)
        if degree is None:
            if not gens:
                raise PermError("degree required for a group without generators")
            degree = len(gens[0].images if isinstance(gens[0], Permutation) else gens[0])
        if degree > DEGREE_CAP:
            raise CapError(f"degree {degree} exceeds cap {DEGREE_CAP}")
        self.degree = degree
        self.generators = [as_perm(g, degree) for g in gens]
        self.witness = witness
        self.name = name
        self._cache: dict = {}
        self._build(tuple(base_prefix))

    # chain construction -------------------------------------------------
    def _build(self, prefix):
        n = self.degree
        gens = self.generators
        if prefix:
            levels = _schreier_sims(gens, n, prefix, self.witness)
        else:
            # canonical base: grow the prefix one smallest-moved point at a time
            fixed: list[int] = []
            levels = []
            cur = [g for g in gens if not is_identity(g)]
            while cur:
                moved = min(int(np.flatnonzero(g != np.arange(n))[0]) for g in cur)
                fixed.append(moved)
                levels = _schreier_sims(gens, n, fixed, self.witness)
                nxt = levels[len(fixed)].gens if len(levels) > len(fixed) else []
                cur = [g for g in nxt if not is_identity(g)]
            if not fixed:
                levels = []
        self._levels = levels
        self.base = [lev.point for lev in levels]
        self.order = math.prod(len(lev.trans) for lev in levels)
        if self.order > ORDER_CAP:
            raise CapError(f"group order {self.order} exceeds cap {ORDER_CAP}")

    @property
    def orbit_sizes(self):
        return [len(lev.trans) for lev in self._levels]

    def strong_generators(self, level: int = 0):
        return list(self._levels[level].gens) if level < len(self._levels) else []

    def __repr__(self):
        label = self.name or "PermGroup"
        return f"<{label} degree={self.degree} order={self.order}>"

    def __len__(self):
        return self.order

    # membership -----------------------------------------------------------
    def sift(self, p) -> tuple[np.ndarray, int]:
        h = as_perm(p, self.degree)
        for j, lev in enumerate(self._levels):
            u = lev.trans.get(int(h[lev.point]))
            if u is None:
                return h, j
            h = inverse(u)[h]
        return h, len(self._levels)

    def contains(self, p, witness: bool = False):
        """Membership test; with ``witness=True`` returns ``(bool, word)``."""
        h = np.asarray(p.images if isinstance(p, Permutation) else p, dtype=np.intp)
        if len(h) != self.degree:
            raise PermError(f"degree mismatch: {len(h)} vs {self.degree}")
        if witness and not self.witness:
            raise PermError("group was built without witness tracking")
        word: tuple = ()
        for lev in self._levels:
            y = int(h[lev.point])
            u = lev.trans.get(y)
            if u is None:
                return (False, None) if witness else False
            h = inverse(u)[h]
            if witness:
                word = lev.twords[y] + word
        ok = is_identity(h)
        if witness:
            return ok, (word if ok else None)
        return ok

    def __contains__(self, p):
        return self.contains(p)

    def is_subgroup_of(self, other: PermGroup) -> bool:
        return all(other.contains(g) for g in self.generators)

    def is_normal_in(self, other: PermGroup) -> bool:
        return all(self.contains(conj(n, g)) for n in self.generators for g in other.generators)

    def is_trivial(self) -> bool:
        return self.order == 1

    def random_element(self, rng: random.Random) -> np.ndarray:
        out = identity(self.degree)
        for lev in reversed(self._levels):
            pts = sorted(lev.trans)
            out = lev.trans[pts[rng.randrange(len(pts))]][out]
        return out

    def evaluate(self, word) -> np.ndarray:
        return eval_word(word, self.generators, self.degree)

    # enumeration ------------------------------------------------------------
    def _key_radix(self):
        n, b = self.degree, len(self.base)
        if b and n**b >= 2**62:
            raise CapError(f"base of length {b} at degree {n} overflows 64-bit element keys")
        return np.array([n ** (b - 1 - j) for j in range(b)], dtype=np.int64)

    def keys_of(self, rows: np.ndarray) -> np.ndarray:
        """Canonical integer keys (lexicographic order) of permutations in rows."""
        rows = np.atleast_2d(rows)
        if not self.base:
            return np.zeros(len(rows), dtype=np.int64)
        return rows[:, self.base].astype(np.int64) @ self._key_radix()

    def elements(self) -> np.ndarray:
        """All elements as an (order, degree) array sorted in canonical order."""
        if "elements" in self._cache:
            return self._cache["elements"]
        if self.order > ENUM_CAP:
            raise CapError(f"|G| = {self.order} too large for enumeration (cap {ENUM_CAP})")
        dtype = np.uint8 if self.degree <= 256 else np.uint16
        X = identity(self.degree)[None, :].astype(dtype)
        for lev in reversed(self._levels):
            T = np.stack([lev.trans[pt] for pt in sorted(lev.trans)]).astype(dtype)
            # x * u for every transversal u: u[x]
            X = np.concatenate([u[X] for u in T])
        keys = self.keys_of(X)
        order = np.argsort(keys, kind="stable")
        X = np.ascontiguousarray(X[order])
        self._cache["elements"] = X
        self._cache["keys"] = keys[order]
        return X

    def element_keys(self) -> np.ndarray:
        self.elements()
        return self._cache["keys"]

    def index_of(self, rows: np.ndarray) -> np.ndarray:
        """Positions of the given group elements inside ``elements()``."""
        keys = self.element_keys()
        k = self.keys_of(rows)
        idx = np.searchsorted(keys, k)
        idx = np.minimum(idx, len(keys) - 1)
        if not np.all(keys[idx] == k):
            raise PermError("row is not an element of the group")
        return idx

    def index_of_base_images(self, imgs: np.ndarray) -> np.ndarray:
        """Like index_of but from base images alone (shape (m, len(base)))."""
        keys = self.element_keys()
        k = imgs.astype(np.int64) @ self._key_radix() if self.base else np.zeros(len(imgs), np.int64)
        idx = np.searchsorted(keys, k)
        return np.minimum(idx, len(keys) - 1)


# --------------------------------------------------------- constructions

def group_make(generators, degree: int | None = None, **kw) -> PermGroup:
    return PermGroup(generators, degree, **kw)


def trivial_group(degree: int) -> PermGroup:
    return PermGroup([], degree)


def subgroup(G: PermGroup, gens) -> PermGroup:
    return PermGroup(list(gens), G.degree)


def normal_closure(G: PermGroup, seeds) -> PermGroup:
    """Smallest normal subgroup of G containing the seeds."""
    seeds = [as_perm(s, G.degree) for s in seeds]
    for s in seeds:
        if not G.contains(s):
            raise PermError("seed is not an element of G")
    gens = [s for s in seeds if not is_identity(s)]
    N = PermGroup(gens, G.degree)
    queue = list(gens)
    while queue:
        x = queue.pop()
        for g in G.generators:
            c = conj(x, g)
            if not N.contains(c):
                gens.append(c)
                queue.append(c)
                N = PermGroup(gens, G.degree)
    return N


def commutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """a^-1 b^-1 a b."""
    return b[a[inverse(b)[inverse(a)]]]


def derived_subgroup(G: PermGroup) -> PermGroup:
    gens = G.generators
    comms = [commutator(a, b) for i, a in enumerate(gens) for b in gens[i + 1:]]
    comms = [c for c in comms if not is_identity(c)]
    if not comms:
        return trivial_group(G.degree)
    return normal_closure(G, comms)


def derived_series(G: PermGroup, max_len: int = 64) -> list[PermGroup]:
    series = [G]
    while len(series) < max_len:
        D = derived_subgroup(series[-1])
        if D.order == series[-1].order:
            break
        series.append(D)
    return series


def is_solvable(G: PermGroup) -> bool:
    return derived_series(G)[-1].order == 1


def direct_product(A: PermGroup, B: PermGroup) -> PermGroup:
    """A on points [0, nA), B on [nA, nA+nB)."""
    na, nb = A.degree, B.degree
    gens = [np.concatenate([g, np.arange(na, na + nb)]) for g in A.generators]
    gens += [np.concatenate([np.arange(na), g + na]) for g in B.generators]
    return PermGroup(gens, na + nb)


def wreath(A: PermGroup, top: PermGroup) -> PermGroup:
    """A wr top, with copy i of A on points [i*nA, (i+1)*nA)."""
    na, m = A.degree, top.degree
    n = na * m
    gens = []
    reps = sorted({min(orb) for orb in orbits(top)})
    for r in reps:
        for g in A.generators:
            p = identity(n)
            p[r * na:(r + 1) * na] = g + r * na
            gens.append(p)
    for t in top.generators:
        p = np.empty(n, dtype=np.intp)
        for i in range(m):
            p[i * na:(i + 1) * na] = np.arange(na) + t[i] * na
        gens.append(p)
    return PermGroup(gens, n)


def wreath_c2(A: PermGroup) -> PermGroup:
    return wreath(A, PermGroup([[1, 0]], 2))


def orbits(G: PermGroup) -> list[list[int]]:
    n = G.degree
    seen = np.zeros(n, dtype=bool)
    out = []
    for s in range(n):
        if seen[s]:
            continue
        orb = [s]
        seen[s] = True
        for x in orb:
            for g in G.generators:
                y = int(g[x])
                if not seen[y]:
                    seen[y] = True
                    orb.append(y)
        out.append(sorted(orb))
    return out


def permutation_image(G: PermGroup, points_map) -> PermGroup:
    """Image of G under a homomorphism given on generators."""
    return PermGroup([points_map(g) for g in G.generators])


# ------------------------------------------------------------- quotients

@dataclass
class QuotientAction:
    """G acting on G/N, realized as a permutation group."""

    source: PermGroup
    kernel: PermGroup
    image: PermGroup
    mode: str  # "blocks", "cosets" or "trivial"
    _data: dict = field(default_factory=dict, repr=False)

    def image_of(self, g) -> np.ndarray:
        g = as_perm(g, self.source.degree)
        if self.mode == "trivial":
            return identity(1)
        if self.mode == "blocks":
            block_of, reps = self._data["block_of"], self._data["reps"]
            return block_of[g[reps]]
        G = self.source
        reps = self._data["coset_rep_rows"]
        labels = self._data["labels"]
        return labels[G.index_of(g[reps])]

    def preimage(self, q) -> np.ndarray:
        """Some element of the source mapping to q."""
        q = as_perm(q, self.image.degree)
        if self.mode == "trivial":
            return identity(self.source.degree)
        if self.mode == "cosets":
            c = int(q[self._data["identity_label"]])
            return self.source.elements()[self._data["rep_index"][c]].astype(np.intp)
        graph: PermGroup = self._data["graph"]
        n = self.source.degree
        hq = q.copy()
        acc = identity(n)
        for lev in graph._levels[: self._data["qbase_len"]]:
            y = int(hq[lev.point - n])
            u = lev.trans.get(y + n)
            if u is None:
                raise PermError("element is not in the image")
            uq = u[n:] - n
            hq = inverse(uq)[hq]
            acc = acc[u[:n]]
        if not is_identity(hq):
            raise PermError("element is not in the image")
        return acc

    def preimage_subgroup(self, H: PermGroup) -> PermGroup:
        gens = [self.preimage(h) for h in H.generators] + list(self.kernel.generators)
        return PermGroup(gens, self.source.degree)


def coset_action(G: PermGroup, N: PermGroup, *, index_cap: int = INDEX_CAP) -> QuotientAction:
    if not N.is_subgroup_of(G) or not N.is_normal_in(G):
        raise PermError("N is not a normal subgroup of G")
    index = G.order // N.order
    if index > index_cap:
        raise CapError(f"index [G:N] = {index} exceeds cap {index_cap}")
    n = G.degree
    # action on the orbits of N (a block system for G); kernel may exceed N
    orbs = orbits(N)
    block_of = np.empty(n, dtype=np.intp)
    for i, o in enumerate(orbs):
        block_of[o] = i
    reps = np.array([o[0] for o in orbs], dtype=np.intp)
    imgs = [block_of[g[reps]] for g in G.generators]
    moved = [i for i in range(len(orbs)) if any(im[i] != i for im in imgs)]
    if index == 1:
        return QuotientAction(G, N, PermGroup([], 1), "trivial")
    if moved:
        # restrict to the moved blocks so the image degree stays small
        relabel = {b: i for i, b in enumerate(moved)}
        m = len(moved)
        qgens = [np.array([relabel[int(im[b])] for b in moved], dtype=np.intp) for im in imgs]
        image = PermGroup(qgens, m)
        if image.order == index:
            block_map = np.full(len(orbs), -1, dtype=np.intp)
            for b, i in relabel.items():
                block_map[b] = i
            sub_reps = reps[moved]
            bo = np.full(n, -1, dtype=np.intp)
            for b in moved:
                bo[orbs[b]] = relabel[b]
            graph_gens = [np.concatenate([g, qg + n]) for g, qg in zip(G.generators, qgens)]
            graph = PermGroup(graph_gens, n + m, base_prefix=[n + b for b in image.base])
            return QuotientAction(G, N, image, "blocks", {
                "block_of": bo, "reps": sub_reps, "graph": graph,
                "qbase_len": len(image.base)})
    return _regular_coset_action(G, N, index)


def _regular_coset_action(G: PermGroup, N: PermGroup, index: int) -> QuotientAction:
    X = G.elements()
    order = G.order
    # right cosets N x: components of x -> n x for generators n of N
    succ = [G.index_of(X[:, ng]) for ng in N.generators]
    labels_raw = kernels.label_components(order, succ)
    # relabel cosets by their smallest element (canonical order)
    first = np.full(labels_raw.max() + 1, order, dtype=np.int64)
    np.minimum.at(first, labels_raw, np.arange(order))
    rank = np.argsort(np.argsort(first))
    labels = rank[labels_raw]
    rep_index = np.sort(first)
    qgens = []
    reps_rows = X[rep_index]
    for g in G.generators:
        img_idx = G.index_of(g[reps_rows])
        qgens.append(labels[img_idx].astype(np.intp))
    image = PermGroup(qgens, index)
    if image.order != index:
        raise PermError("coset action image has wrong order")  # pragma: no cover
    return QuotientAction(G, N, image, "cosets", {
        "labels": labels, "rep_index": rep_index,
        "identity_label": int(labels[0]), "coset_rep_rows": reps_rows})
