"""The named catalog: one canonical descriptor per isomorphism type."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .descriptor import Atom, parse
from .registry import build_group, family_order, out_order

# simple groups from the small-|E| classification, plus small members of the families
SIMPLE = [
    "A5", "SL(3,2)", "A6", "PSL(2,8)", "PSL(2,11)", "PSL(2,13)", "PSL(2,16)",
    "PSL(2,17)", "PSL(2,19)", "PSL(2,25)", "PSL(2,27)", "PSL(3,3)", "PSU(3,3)",
    "PSU(3,4)", "PSL(3,4)", "Sz(8)", "A7", "A8",
]

ALMOST_SIMPLE = [
    "S5", "S6", "S7", "PGL(2,9)", "PSL(2,7).2", "PSL(2,8).3", "PSL(2,11).2",
    "PSL(2,27).3", "PSU(3,3).2", "Sz(8).3",
]

OTHER = [
    "SL(2,5)", "A5 x C7", "PSL(2,8).3 x C7", "(PSL(2,8) x C7).3", "(Sz(8) x C5).3",
    "A5 x A5", "A5 wr C2", "SL(3,2) wr C2", "S4", "C15",
]

CATALOG = SIMPLE + ALMOST_SIMPLE + OTHER

# (S, A) with S normal in A on the same points
ALMOST_SIMPLE_PAIRS = [("A5", "S5"), ("PSL(2,8)", "PSL(2,8).3"), ("Sz(8)", "Sz(8).3"), ("A6", "S6")]

# the only possible G/Sol(G) when k_R(G) <= 5
SMALL_KR_QUOTIENTS = ("1", "SL(3,2)", "A5", "PSL(2,8).3", "Sz(8).3")

# simple groups with few real element orders: the first list has at most four,
# the second exactly five
AT_MOST_FOUR_REAL_ORDERS = ["A5", "SL(3,2)", "PSL(3,3)", "PSU(3,3)"]
FIVE_REAL_ORDERS = ["PSL(2,8)", "A6", "PSL(2,11)", "PSL(2,27)", "PSU(3,4)", "PSL(3,4)", "Sz(8)"]
OPTIONAL = {"J1": "generator data not bundled", "PSU(3,8)": "over enumeration caps"}


@dataclass(frozen=True)
class CatalogEntry:
    descriptor: str

    @property
    def node(self):
        return parse(self.descriptor)

    def build(self):
        return build_group(self.descriptor)

    @property
    def order(self) -> int:
        return family_order(self.node)

    @property
    def out_order(self) -> int | None:
        n = self.node
        if isinstance(n, Atom) and self.descriptor in SIMPLE:
            return out_order(n)
        return None


def entries() -> list[CatalogEntry]:
    return [CatalogEntry(d) for d in CATALOG]


def compute_fingerprints(names=None):
    from ..structure import fingerprint
    names = CATALOG if names is None else names
    fps = {name: fingerprint(build_group(name)) for name in names}
    seen: dict = {}
    for name, fp in fps.items():
        if fp in seen:
            raise AssertionError(f"catalog fingerprints collide: {seen[fp]} and {name}")
        seen[fp] = name
    return fps


def write_fingerprints(path: Path | None = None) -> Path:
    from ..structure import pinned_fingerprints
    path = path or Path(__file__).resolve().parent.parent / "data" / "fingerprints.json"
    fps = compute_fingerprints()
    payload = {"schema": 1, "fingerprints": {k: v.to_dict() for k, v in fps.items()}}
    path.write_text(json.dumps(payload, indent=1) + "\n")
    pinned_fingerprints.cache_clear()
    return path
