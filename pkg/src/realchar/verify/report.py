"""Verification reports: JSON for machines, a fixed-width table for people."""

from __future__ import annotations

import json
import platform
from dataclasses import asdict, dataclass, field

import numpy as np

from .. import __version__
from ..kernels import BACKEND
from .cache import ENGINE_VERSION

SCHEMA_VERSION = 1
# where an expected value comes from: a published statement being replayed,
# something true by construction, or a value pinned from a brute-force oracle
PROVENANCE = ("CLAIM", "TRIVIAL", "DERIVED")
STATUSES = ("pass", "fail", "skipped")


def _plain(x):
    """Make computed values JSON-friendly and deterministic."""
    if isinstance(x, (set, frozenset)):
        return sorted(_plain(v) for v in x)
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, np.integer):
        return int(x)
    if isinstance(x, (bool, int, float, str)) or x is None:
        return x
    return str(x)


@dataclass
class Item:
    descriptor: str
    claim: str
    computed: object
    expected: object
    provenance: str
    status: str
    wall_time: float = 0.0
    note: str = ""

    def __post_init__(self):
        if self.provenance not in PROVENANCE:
            raise ValueError(f"unknown provenance tag {self.provenance!r}")
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")
        self.computed = _plain(self.computed)
        self.expected = _plain(self.expected)

    @property
    def passed(self) -> bool:
        return self.status != "fail"


def toolchain() -> dict:
    return {
        "realchar": __version__,
        "python": platform.python_version(),
        "numpy": np.__version__,
        "backend": BACKEND,
    }


@dataclass
class VerificationReport:
    check: str
    items: list[Item]
    seed: int = 0
    toolchain: dict = field(default_factory=toolchain)
    cache_version: str = ENGINE_VERSION

    def __post_init__(self):
        self.items = sorted(self.items, key=lambda it: (it.descriptor, it.claim))

    @property
    def passed(self) -> bool:
        # skipped items (unavailable groups) neither pass nor fail the check
        return all(it.passed for it in self.items)

    def counts(self) -> dict[str, int]:
        out = dict.fromkeys(STATUSES, 0)
        for it in self.items:
            out[it.status] += 1
        return out

    def to_dict(self, *, wall_times: bool = True) -> dict:
        items = []
        for it in self.items:
            d = asdict(it)
            if not wall_times:
                d.pop("wall_time")
            items.append(d)
        return {
            "schema_version": SCHEMA_VERSION,
            "check": self.check,
            "seed": self.seed,
            "overall_pass": self.passed,
            "counts": self.counts(),
            "toolchain": self.toolchain,
            "cache_version": self.cache_version,
            "items": items,
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(**kw), indent=2, sort_keys=True)

    def table(self) -> str:
        rows = [("status", "descriptor", "claim", "computed", "expected", "tag", "sec")]
        for it in self.items:
            rows.append((it.status.upper(), it.descriptor, it.claim, _short(it.computed),
                         _short(it.expected), it.provenance, f"{it.wall_time:.2f}"))
        widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
        lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows]
        c = self.counts()
        verdict = "PASS" if self.passed else "FAIL"
        lines.append(f"{self.check}: {verdict} ({c['pass']} pass, {c['fail']} fail, "
                     f"{c['skipped']} skipped)")
        return "\n".join(lines)


def _short(v, width: int = 40) -> str:
    s = v if isinstance(v, str) else json.dumps(v)
    return s if len(s) <= width else s[: width - 3] + "..."


def combine(reports: list[VerificationReport], check: str = "all") -> dict:
    """Envelope for several checks in one JSON document."""
    return {
        "schema_version": SCHEMA_VERSION,
        "check": check,
        "overall_pass": all(r.passed for r in reports),
        "toolchain": toolchain(),
        "cache_version": ENGINE_VERSION,
        "reports": [r.to_dict() for r in reports],
    }
