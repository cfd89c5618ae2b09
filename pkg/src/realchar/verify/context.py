"""Per-run settings plus cached access to class data and tables."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..chartab import CharacterTable, character_table
from ..classes import ClassSet, conjugacy_classes
from . import oracle_data
from .cache import Cache
from .groups import cache_name, resolve


@dataclass
class Context:
    cache_dir: str | None = None
    seed: int = 0
    strict: bool = False
    use_cache: bool = True
    _cache: Cache | None = field(default=None, repr=False, compare=False)

    @property
    def cache(self) -> Cache:
        if self._cache is None:
            self._cache = Cache(self.cache_dir, enabled=self.use_cache)
        return self._cache

    def __getstate__(self):
        d = dict(self.__dict__)
        d["_cache"] = None
        return d

    def group(self, name: str):
        return resolve(name)

    def classes(self, name: str) -> ClassSet:
        """Class data, from disk when possible (no group attached in that case)."""
        key = cache_name(name)
        payload = self.cache.load("classes", key)
        if payload is not None:
            return ClassSet.from_dict(payload)
        C = conjugacy_classes(self.group(name))
        self.cache.store("classes", key, C.to_dict())
        return C

    def table(self, name: str) -> CharacterTable:
        key = cache_name(name)
        kind = f"chartab:{self.seed}"
        payload = self.cache.load(kind, key)
        if payload is not None:
            return CharacterTable.from_dict(payload, self.classes(name))
        T = character_table(self.group(name), seed=self.seed)
        self.cache.store(kind, key, T.to_dict())
        return T

    def expected(self, section: str, key):
        return oracle_data.expected(section, key, strict=self.strict)
