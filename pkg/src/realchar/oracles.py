"""Slow, independent reference computations on plain tuples.

Nothing here touches stabilizer chains, element keys or the compiled kernels;
these routines exist only to cross-check the fast paths.
"""

from __future__ import annotations

import math
from collections import Counter
from fractions import Fraction
from itertools import product

Perm = tuple[int, ...]


def _mul(a: Perm, b: Perm) -> Perm:
    # apply a, then b
    return tuple(b[i] for i in a)


def _inv(a: Perm) -> Perm:
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


def _order(a: Perm) -> int:
    seen, o = [False] * len(a), 1
    for i in range(len(a)):
        if not seen[i]:
            n, j = 0, i
            while not seen[j]:
                seen[j] = True
                j = a[j]
                n += 1
            o = o * n // math.gcd(o, n)
    return o


def closure(gens, degree: int, limit: int = 10**6) -> set[Perm]:
    """All products of the generators (breadth-first)."""
    gens = [tuple(int(x) for x in g) for g in gens]
    e = tuple(range(degree))
    seen = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = _mul(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        if len(seen) > limit:
            raise RuntimeError("closure exceeds limit")
        frontier = nxt
    return seen


def group_order(gens, degree: int) -> int:
    return len(closure(gens, degree))


def conjugacy_partition(gens, degree: int) -> list[frozenset[Perm]]:
    """Orbits of conjugation by the generators over the whole group."""
    gens = [tuple(int(x) for x in g) for g in gens]
    invs = [_inv(g) for g in gens]
    remaining = closure(gens, degree)
    classes = []
    while remaining:
        x = min(remaining)
        cls = {x}
        frontier = [x]
        while frontier:
            nxt = []
            for y in frontier:
                for g, gi in zip(gens, invs):
                    z = _mul(_mul(gi, y), g)
                    if z not in cls:
                        cls.add(z)
                        nxt.append(z)
            frontier = nxt
        classes.append(frozenset(cls))
        remaining -= cls
    return classes


def real_data(gens, degree: int, parts=None) -> tuple[int, tuple[int, ...], int]:
    """(#real classes, real element orders, #rational classes) by brute force."""
    parts = conjugacy_partition(gens, degree) if parts is None else parts
    where = {x: i for i, c in enumerate(parts) for x in c}
    kr, orders, kq = 0, set(), 0
    for c in parts:
        x = next(iter(c))
        o = _order(x)
        if _inv(x) in c:
            kr += 1
            orders.add(o)
        # rational: x^j in the same class for every j coprime to o
        ok = True
        for j in range(2, o):
            if math.gcd(j, o) == 1:
                y = x
                for _ in range(j - 1):
                    y = _mul(y, x)
                if where[y] != where[x]:
                    ok = False
                    break
        kq += ok
    return kr, tuple(sorted(orders)), kq


def generated(elements, degree: int) -> set[Perm]:
    """Subgroup generated by a collection of permutations."""
    H = {tuple(range(degree))}
    gens = []
    for x in elements:
        x = tuple(int(v) for v in x)
        if x not in H:
            gens.append(x)
            H = closure(gens, degree)
    return H


def largest_normal_p_subgroup(gens, degree: int, p: int) -> int:
    """|O_p(G)|: generated by the p-element classes whose normal closure is a p-group."""
    parts = conjugacy_partition(gens, degree)

    def is_p_power(n):
        while n % p == 0:
            n //= p
        return n == 1

    good = []
    for c in parts:
        x = next(iter(c))
        if _order(x) > 1 and is_p_power(_order(x)):
            N = generated(c, degree)
            if is_p_power(len(N)):
                good.extend(c)
    return len(generated(good, degree))


def alternating_k_real(n: int) -> int:
    """Real classes of A_n from cycle types.

    A cycle type in A_n splits iff its parts are distinct and odd; the two
    halves are real iff the number of parts congruent to 3 mod 4 is even.
    """
    total = 0
    for part in _partitions(n):
        if sum(1 for x in part if x % 2 == 0) % 2:
            continue
        if len(set(part)) == len(part) and all(x % 2 for x in part):
            if sum(1 for x in part if x % 4 == 3) % 2 == 0:
                total += 2
        else:
            total += 1
    return total


def _partitions(n, largest=None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in _partitions(n - k, k):
            yield (k,) + rest


def dixon_prime_search(order: int, e: int) -> int:
    """Trial-division search for the smallest prime p = 1 mod e with p^2 > 4|G|."""
    p = 1
    while True:
        p += e
        if p * p > 4 * order and p > 1 and all(p % d for d in range(2, math.isqrt(p) + 1)):
            return p


def is_prime_trial(n: int) -> bool:
    return n > 1 and all(n % d for d in range(2, math.isqrt(n) + 1))


def field_orders(q: int, mul, elements) -> Counter:
    """Histogram of multiplicative orders in a field given by its multiplication."""
    out = Counter()
    for x in elements:
        if x == 0:
            continue
        y, k = x, 1
        while y != 1:
            y, k = mul(y, x), k + 1
        out[k] += 1
    return out


def structure_constants(gens, degree: int):
    """a[i][j][k] for the classes in brute-force partition order (small groups only)."""
    parts = conjugacy_partition(gens, degree)
    where = {x: i for i, c in enumerate(parts) for x in c}
    reps = [min(c) for c in parts]
    r = len(parts)
    a = [[[0] * r for _ in range(r)] for _ in range(r)]
    for k, z in enumerate(reps):
        for c in parts:
            for x in c:
                y = _mul(_inv(x), z)
                a[where[x]][where[y]][k] += 1
    return parts, a


def k_from_counts(k_real: int, out: int) -> Fraction:
    return Fraction(k_real, out) - out


def vectors(p: int, d: int):
    return list(product(range(p), repeat=d))


def class_summary(gens, degree: int) -> dict:
    """Order, class count and real/rational data, all by brute force."""
    gens = [tuple(int(x) for x in g) for g in gens]
    if not gens:
        return {"order": 1, "class_count": 1, "k_real": 1, "real_orders": [1], "k_rational": 1}
    parts = conjugacy_partition(gens, degree)
    kr, orders, kq = real_data(gens, degree, parts)
    return {"order": sum(len(c) for c in parts), "class_count": len(parts), "k_real": kr,
            "real_orders": list(orders), "k_rational": kq}


def case3_scan(f_max: int) -> list[int]:
    """Trial-division version of the 3^f prime-pair scan (f >= 7, f odd prime)."""
    out = []
    for f in range(7, f_max + 1):
        if not is_prime_trial(f):
            continue
        r, s = (3**f + 1) // 4, (3**f - 1) // 2
        if r != s and r % 2 and s % 2 and is_prime_trial(r) and is_prime_trial(s):
            out.append(f)
    return out
