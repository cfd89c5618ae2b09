"""p-cores, Fitting subgroup, solvable radical, O^{2'}, and fingerprints."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from importlib import resources

from .algebra import factorint, prime_power
from .classes import conjugacy_classes
from .perm import (PermGroup, QuotientAction, coset_action, is_solvable,
                   normal_closure, trivial_group)

FITTING_DEPTH_CAP = 20


class StructureError(RuntimeError):
    pass


def _is_p_power(n: int, p: int) -> bool:
    if n == 1:
        return True
    pp = prime_power(n)
    return pp is not None and pp[0] == p


def p_core(G: PermGroup, p: int) -> PermGroup:
    """Largest normal p-subgroup: closure of the p-elements whose closure is a p-group."""
    if G.order % p:
        return trivial_group(G.degree)
    C = conjugacy_classes(G)
    seeds = []
    for rep, o in zip(C.reps, C.orders):
        if o > 1 and _is_p_power(o, p):
            N = normal_closure(G, [rep])
            if _is_p_power(N.order, p):
                seeds.append(rep)
    if not seeds:
        return trivial_group(G.degree)
    return normal_closure(G, seeds)


def fitting(G: PermGroup, cores: dict[int, PermGroup] | None = None) -> PermGroup:
    if cores is None:
        cores = {p: p_core(G, p) for p in factorint(G.order)}
    gens = [g for K in cores.values() for g in K.generators]
    return PermGroup(gens, G.degree) if gens else trivial_group(G.degree)


def o2prime(G: PermGroup) -> PermGroup:
    """Normal closure of all 2-elements; the quotient has odd order."""
    C = conjugacy_classes(G)
    seeds = [r for r, o in zip(C.reps, C.orders) if o > 1 and _is_p_power(o, 2)]
    if not seeds:
        return trivial_group(G.degree)
    return normal_closure(G, seeds)


# ------------------------------------------------------------ fingerprints

@dataclass(frozen=True)
class Fingerprint:
    order: int
    class_count: int
    k_real: int
    real_orders: tuple[int, ...]
    order_histogram: tuple[tuple[int, int], ...]
    solvable: bool

    def to_dict(self) -> dict:
        d = asdict(self)
        d["real_orders"] = list(self.real_orders)
        d["order_histogram"] = [list(x) for x in self.order_histogram]
        return d

    @classmethod
    def from_dict(cls, d: dict) -> Fingerprint:
        return cls(d["order"], d["class_count"], d["k_real"], tuple(d["real_orders"]),
                   tuple(tuple(x) for x in d["order_histogram"]), d["solvable"])


def fingerprint(G: PermGroup) -> Fingerprint:
    if G.order == 1:
        return Fingerprint(1, 1, 1, (1,), ((1, 1),), True)
    C = conjugacy_classes(G)
    kr, E, _ = C.real_data()
    return Fingerprint(G.order, len(C), kr, E, C.order_histogram(), is_solvable(G))


@lru_cache(maxsize=1)
def pinned_fingerprints() -> dict[str, Fingerprint]:
    try:
        text = resources.files("realchar.data").joinpath("fingerprints.json").read_text()
    except FileNotFoundError:
        return {}
    raw = json.loads(text)
    return {name: Fingerprint.from_dict(fp) for name, fp in raw["fingerprints"].items()}


def identify(fp: Fingerprint, table: dict[str, Fingerprint] | None = None) -> str:
    if fp.order == 1:
        return "1"
    table = pinned_fingerprints() if table is None else table
    hits = [name for name, other in table.items() if other == fp]
    return hits[0] if len(hits) == 1 else "unknown"


# --------------------------------------------------------- solvable radical

@dataclass
class StructureReport:
    group: PermGroup
    sol_radical: PermGroup
    quotient: QuotientAction
    fitting: PermGroup
    p_cores: dict[int, PermGroup]
    o2prime: PermGroup
    quotient_fingerprint: Fingerprint
    stages: list[int] = field(default_factory=list)   # |Fitting| at each stage

    @property
    def quotient_name(self) -> str:
        return identify(self.quotient_fingerprint)

    def summary(self) -> dict:
        return {
            "order": self.group.order,
            "sol_order": self.sol_radical.order,
            "fitting_order": self.fitting.order,
            "p_cores": {str(p): K.order for p, K in sorted(self.p_cores.items())},
            "o2prime_order": self.o2prime.order,
            "quotient_order": self.quotient.image.order,
            "quotient": self.quotient_name,
            "stages": list(self.stages),
        }


def _sol(G: PermGroup, depth: int, stages: list[int]) -> PermGroup:
    if depth > FITTING_DEPTH_CAP:
        raise StructureError(f"Fitting series longer than {FITTING_DEPTH_CAP} stages")
    if is_solvable(G):
        stages.append(G.order)
        return G
    F = fitting(G)
    stages.append(F.order)
    if F.order == 1:
        return F
    Q = coset_action(G, F)
    R = _sol(Q.image, depth + 1, stages)
    if R.order == 1:
        return F
    return Q.preimage_subgroup(R)


def sol_radical(G: PermGroup) -> PermGroup:
    return _sol(G, 0, [])


def solvable_radical(G: PermGroup) -> StructureReport:
    stages: list[int] = []
    cores = {p: p_core(G, p) for p in factorint(G.order)} if G.order > 1 else {}
    F = fitting(G, cores)
    S = _sol(G, 0, stages)
    Q = coset_action(G, S)
    return StructureReport(G, S, Q, F, cores, o2prime(G), fingerprint(Q.image), stages)
