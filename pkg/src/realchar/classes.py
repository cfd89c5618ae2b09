"""Conjugacy classes, power maps and the real/rational class predicates."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .algebra import factorint, lcm
from .perm import CapError, PermGroup, inverse, perm_order, power

CLASS_ORDER_CAP = 2 * 10**6
CLASS_DEGREE_CAP = 300


def unit_generators(e: int) -> list[int]:
    """Small primes coprime to e whose residues generate (Z/eZ)^x."""
    if e <= 2:
        return []
    target = sum(1 for m in range(1, e) if math.gcd(m, e) == 1)
    span = {1}
    gens = []
    m = 1
    while len(span) < target:
        m += 1
        if math.gcd(m, e) != 1 or m % e in span:
            continue
        gens.append(m)
        frontier = list(span)
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = x * g % e
                    if y not in span:
                        span.add(y)
                        nxt.append(y)
            frontier = nxt
    return gens


@dataclass
class ClassSet:
    """Conjugacy classes of a permutation group in canonical order.

    Classes are sorted by element order, then size, then the canonical key of
    the representative (the lexicographically smallest element of the class).
    """

    order: int
    degree: int
    reps: np.ndarray            # (r, degree) representatives
    sizes: list[int]
    orders: list[int]
    inverse_map: list[int]
    power_maps: dict[int, list[int]]
    group: PermGroup | None = field(default=None, repr=False, compare=False)
    class_of: np.ndarray | None = field(default=None, repr=False, compare=False)

    def __len__(self):
        return len(self.sizes)

    @property
    def exponent(self) -> int:
        return lcm(*self.orders)

    @property
    def real(self) -> list[bool]:
        return [self.inverse_map[i] == i for i in range(len(self))]

    @property
    def rational(self) -> list[bool]:
        e = self.exponent
        gens = unit_generators(e)
        return [all(self.power_class(i, m) == i for m in gens) for i in range(len(self))]

    def power_class(self, i: int, m: int) -> int:
        m %= self.exponent
        pm = self.power_maps.get(m)
        if pm is not None:
            return pm[i]
        if self.group is None:
            raise KeyError(f"power map {m} not stored and no group attached")
        self.power_maps[m] = pm = self._compute_power_map(m)
        return pm[i]

    def _compute_power_map(self, m: int) -> list[int]:
        G = self.group
        rows = np.stack([power(np.asarray(r, dtype=np.intp), m) for r in self.reps])
        return [int(c) for c in self.class_of[G.index_of(rows)]]

    def power_classes_of(self, i: int) -> list[int]:
        """Class of g^l for l = 0 .. o(g)-1, g the i-th representative."""
        o = self.orders[i]
        g = np.asarray(self.reps[i], dtype=np.intp)
        rows = [np.arange(self.degree)]
        for _ in range(o - 1):
            rows.append(g[rows[-1]])
        return [int(c) for c in self.class_of[self.group.index_of(np.stack(rows))]]

    def centralizer_order(self, i: int) -> int:
        return self.order // self.sizes[i]

    # ---- the class-level predicates
    def real_data(self) -> tuple[int, tuple[int, ...], int]:
        """(number of real classes, set of real element orders, number of rational classes)."""
        real = self.real
        E = tuple(sorted({o for o, r in zip(self.orders, real) if r}))
        return sum(real), E, sum(self.rational)

    def real_orders(self) -> tuple[int, ...]:
        return self.real_data()[1]

    def k_real(self) -> int:
        return sum(self.real)

    def k_rational(self) -> int:
        return sum(self.rational)

    def real_class_profile(self, m: int) -> int:
        return sum(1 for o, r in zip(self.orders, self.real) if r and o == m)

    def is_c_group(self) -> bool:
        """No real element of order 2m with m > 1 odd."""
        return not any(o % 2 == 0 and (o // 2) % 2 == 1 and o > 2 for o in self.real_orders())

    def order_histogram(self) -> tuple[tuple[int, int], ...]:
        hist: dict[int, int] = {}
        for o, s in zip(self.orders, self.sizes):
            hist[o] = hist.get(o, 0) + s
        return tuple(sorted(hist.items()))

    # ---- serialization
    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "degree": self.degree,
            "reps": [list(map(int, r)) for r in self.reps],
            "sizes": list(self.sizes),
            "orders": list(self.orders),
            "inverse_map": list(self.inverse_map),
            "power_maps": {str(k): list(v) for k, v in sorted(self.power_maps.items())},
        }

    @classmethod
    def from_dict(cls, d: dict) -> ClassSet:
        return cls(
            order=d["order"], degree=d["degree"],
            reps=np.array(d["reps"], dtype=np.intp).reshape(len(d["sizes"]), d["degree"]),
            sizes=list(d["sizes"]), orders=list(d["orders"]),
            inverse_map=list(d["inverse_map"]),
            power_maps={int(k): list(v) for k, v in d["power_maps"].items()},
        )

    def attach(self, G: PermGroup) -> ClassSet:
        """Re-attach a group to a deserialized class set (recomputes class_of)."""
        fresh = conjugacy_classes(G)
        if fresh.to_dict()["reps"] != self.to_dict()["reps"]:
            raise ValueError("cached class data does not match group")
        self.group, self.class_of = G, fresh.class_of
        return self


def _check_caps(G: PermGroup):
    if G.order > CLASS_ORDER_CAP:
        raise CapError(f"|G| = {G.order} too large for enumeration (cap {CLASS_ORDER_CAP})")
    if G.degree > CLASS_DEGREE_CAP:
        raise CapError(f"degree {G.degree} too large for enumeration (cap {CLASS_DEGREE_CAP})")


def class_labels(G: PermGroup) -> np.ndarray:
    """Orbit partition of G under conjugation by its generators (raw labels)."""
    _check_caps(G)
    X = G.elements()
    if not G.base:
        return np.zeros(1, dtype=np.int64)
    radix = G._key_radix()
    keys = G.element_keys()
    base = np.asarray(G.base)
    succ = [kernels.conj_successor(X, g, inverse(g), base, radix, keys) for g in G.generators]
    return kernels.label_components(len(X), succ)


def conjugacy_classes(G: PermGroup) -> ClassSet:
    cached = G._cache.get("classes")
    if cached is not None:
        return cached
    X = G.elements()
    raw = class_labels(G)
    nraw = int(raw.max()) + 1
    first = np.full(nraw, len(X), dtype=np.int64)
    np.minimum.at(first, raw, np.arange(len(X)))
    sizes = np.bincount(raw, minlength=nraw)
    orders = [perm_order(X[i]) for i in first]
    # canonical order: element order, class size, representative key (= index)
    perm = sorted(range(nraw), key=lambda c: (orders[c], int(sizes[c]), int(first[c])))
    rank = np.empty(nraw, dtype=np.int64)
    rank[perm] = np.arange(nraw)
    class_of = rank[raw]
    reps = X[first[perm]].astype(np.intp)
    cs = ClassSet(
        order=G.order, degree=G.degree, reps=reps,
        sizes=[int(sizes[c]) for c in perm], orders=[orders[c] for c in perm],
        inverse_map=[], power_maps={}, group=G, class_of=class_of)
    inv_rows = np.stack([inverse(r) for r in reps])
    cs.inverse_map = [int(c) for c in class_of[G.index_of(inv_rows)]]
    e = cs.exponent
    cs.power_maps[e - 1 if e > 1 else 0] = list(cs.inverse_map)
    for m in sorted(set(unit_generators(e)) | set(factorint(G.order))):
        cs.power_class(0, m)
    G._cache["classes"] = cs
    return cs


def real_data(C: ClassSet):
    return C.real_data()


def is_c_group(C: ClassSet) -> bool:
    return C.is_c_group()


def real_class_profile(C: ClassSet, m: int) -> int:
    return C.real_class_profile(m)
