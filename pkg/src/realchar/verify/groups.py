"""Name -> group for both descriptor strings and sweep-only names (Dic8, C7:C3[2], ...)."""

from __future__ import annotations

from functools import lru_cache

from ..catalog import DescriptorError, build_group, canonical
from ..catalog.sweep import sweep_groups
from ..perm import PermGroup


@lru_cache(maxsize=1)
def _sweep_index() -> dict[str, PermGroup]:
    return dict(sweep_groups())


def resolve(name: str) -> PermGroup:
    try:
        return build_group(name)
    except DescriptorError:
        G = _sweep_index().get(name)
        if G is None:
            raise
        return G


def cache_name(name: str) -> str:
    """Canonical descriptor when the name parses, else the sweep name itself."""
    try:
        return canonical(name)
    except DescriptorError:
        return "sweep:" + name
