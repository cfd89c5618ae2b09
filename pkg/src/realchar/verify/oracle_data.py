"""Checked-in expected values produced by the brute-force oracles.

``oracles.json`` is written only by :func:`regenerate` (``realchar verify
--regen-oracles``). Checks read it; ``--strict`` recomputes each value they
touch and refuses to continue on any disagreement.
"""

from __future__ import annotations

import json
import logging
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .. import oracles
from ..catalog import CATALOG, OPTIONAL, odd_prime_powers
from ..catalog.sweep import sweep_groups
from .groups import resolve

ORACLE_FILE = Path(__file__).resolve().parent / "oracles.json"
ORACLE_SCHEMA = 1
PSL2_RANGE = (5, 81)
ALTERNATING_RANGE = (5, 10)
SCAN_LIMITS = (3, 5, 7, 13)
log = logging.getLogger(__name__)


class OracleMismatch(RuntimeError):
    pass


def group_record(name: str) -> dict:
    G = resolve(name)
    return oracles.class_summary(G.generators, G.degree)


def psl2_record(q: int) -> dict:
    return group_record(f"PSL(2,{q})")


def regenerate(path: Path | None = None, progress=None) -> dict:
    path = path or ORACLE_FILE
    groups = [d for d in CATALOG if d not in OPTIONAL]
    groups += [name for name, _ in sweep_groups() if name not in groups]
    data = {"schema": ORACLE_SCHEMA, "groups": {}, "psl2": {}, "alternating": {}, "case3_scan": {}}
    for name in groups:
        if progress:
            progress(name)
        data["groups"][name] = group_record(name)
    for q in odd_prime_powers(*PSL2_RANGE):
        if progress:
            progress(f"PSL(2,{q})")
        data["psl2"][str(q)] = psl2_record(q)
    for n in range(ALTERNATING_RANGE[0], ALTERNATING_RANGE[1] + 1):
        data["alternating"][str(n)] = oracles.alternating_k_real(n)
    for f in SCAN_LIMITS:
        data["case3_scan"][str(f)] = oracles.case3_scan(f)
    path.write_text(json.dumps(data, indent=1, sort_keys=True) + "\n")
    load.cache_clear()
    return data


@lru_cache(maxsize=1)
def load() -> dict:
    try:
        text = resources.files("realchar.verify").joinpath("oracles.json").read_text()
    except FileNotFoundError:
        log.warning("oracles.json missing; expected values will be recomputed")
        return {"schema": ORACLE_SCHEMA, "groups": {}, "psl2": {}, "alternating": {},
                "case3_scan": {}}
    return json.loads(text)


_RECOMPUTE = {
    "groups": group_record,
    "psl2": lambda k: psl2_record(int(k)),
    "alternating": lambda k: oracles.alternating_k_real(int(k)),
    "case3_scan": lambda k: oracles.case3_scan(int(k)),
}


def expected(section: str, key, *, strict: bool = False):
    """Pinned oracle value; recomputed when missing, and always when strict."""
    key = str(key)
    pinned = load().get(section, {}).get(key)
    if pinned is not None and not strict:
        return pinned
    fresh = _RECOMPUTE[section](key)
    if pinned is not None and fresh != pinned:
        raise OracleMismatch(f"oracle value {section}[{key}] changed: pinned {pinned!r}, "
                             f"recomputed {fresh!r}")
    return fresh
