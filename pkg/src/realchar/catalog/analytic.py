"""Closed-form real-class data for PSL(2,q), q odd, and the K(S) scans.

K(S) = k_R(S)/|Out(S)| - |Out(S)| is kept as an exact Fraction.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction

from ..algebra import divisors, euler_phi, prime_power
from .descriptor import Atom, parse
from .registry import build_group, family_order, out_order

VALIDATION_LIMIT = 81


@dataclass(frozen=True)
class RealProfile:
    q: int
    orders: tuple[int, ...]               # E(S), sorted
    k_real: int
    per_order: dict[int, int]             # real classes of each element order

    def count(self, m: int) -> int:
        return self.per_order.get(m, 0)


@dataclass(frozen=True)
class AsymptoticRecord:
    family: str
    parameter: int
    order: int
    k_real: int
    out_order: int
    K: Fraction
    source: str     # "enumeration" or "analytic"


def _analytic(q: int) -> RealProfile:
    p, _ = prime_power(q)
    eps = 1 if q % 4 == 1 else -1
    per: dict[int, int] = {1: 1}
    for m in ((q - eps) // 2, (q + eps) // 2):
        for d in divisors(m):
            if d == 2:
                per[2] = 1
            elif d > 2:
                per[d] = per.get(d, 0) + euler_phi(d) // 2
    if eps == 1:
        # both unipotent classes are real exactly when -1 is a square
        per[p] = 2
    return RealProfile(q, tuple(sorted(per)), sum(per.values()), per)


def enumerated_profile(q: int) -> RealProfile:
    from ..classes import conjugacy_classes
    C = conjugacy_classes(build_group(f"PSL(2,{q})"))
    per: dict[int, int] = {}
    for o, r in zip(C.orders, C.real):
        if r:
            per[o] = per.get(o, 0) + 1
    return RealProfile(q, tuple(sorted(per)), sum(per.values()), per)


def odd_prime_powers(lo: int, hi: int) -> list[int]:
    return [q for q in range(max(lo, 3), hi + 1) if q % 2 and prime_power(q)]


_validated: dict[int, bool] = {}
_lock = threading.Lock()


def validate_psl2_profile(limit: int = VALIDATION_LIMIT) -> list[tuple[int, bool]]:
    """Compare the closed form with enumeration for every odd q in [5, limit]."""
    out = []
    for q in odd_prime_powers(5, limit):
        with _lock:
            ok = _validated.get(q)
        if ok is None:
            ok = _analytic(q) == enumerated_profile(q)
            with _lock:
                _validated[q] = ok
        out.append((q, ok))
    return out


def psl2_real_profile(q: int) -> RealProfile:
    pp = prime_power(q)
    if pp is None or pp[0] == 2:
        raise ValueError("q must be an odd prime power (even q: enumerate SL(2,q))")
    if q < 5:
        raise ValueError("q must be at least 5")
    if q > VALIDATION_LIMIT:
        bad = [r for r, ok in validate_psl2_profile() if not ok]
        if bad:
            raise AssertionError(f"closed form disagrees with enumeration at q = {bad}")
    return _analytic(q)


def kfunction(k_real: int, out: int) -> Fraction:
    return Fraction(k_real, out) - out


def asymptotic_scan(family: str, params, *, use_analytic: bool = True) -> list[AsymptoticRecord]:
    """K(S) for the family members "A" (n) or "PSL2" (q), sorted by |S|."""
    from ..classes import conjugacy_classes
    recs = []
    for n in params:
        if family == "A":
            node = Atom("A", (n,))
        elif family == "PSL2":
            node = Atom("PSL", (2, n))
        elif family == "Sz":
            node = Atom("Sz", (n,))
        else:
            node = parse(family.replace("?", str(n)))
        out = out_order(node)
        if family == "PSL2" and n % 2 and use_analytic:
            kr, src = psl2_real_profile(n).k_real, "analytic"
        else:
            kr, src = conjugacy_classes(build_group(node)).k_real(), "enumeration"
        recs.append(AsymptoticRecord(family, n, family_order(node), kr, out,
                                     kfunction(kr, out), src))
    recs.sort(key=lambda r: r.order)
    return recs


def non_decreasing(values) -> bool:
    values = list(values)
    return all(a <= b for a, b in zip(values, values[1:]))
