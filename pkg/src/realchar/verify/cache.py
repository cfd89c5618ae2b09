"""On-disk cache of class data and character tables.

Entries are JSON files named by sha256(kind, canonical descriptor, engine
version). Each file stores its payload next to a sha256 checksum of the
payload bytes; anything that fails to parse or verify is deleted and treated
as a miss.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
from pathlib import Path

from .. import __version__

ENGINE_VERSION = f"{__version__}+cache1"
ENV_VAR = "REALCHAR_CACHE_DIR"
log = logging.getLogger(__name__)


def default_cache_dir() -> Path:
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME") or Path.home() / ".cache"
    return Path(base) / "realchar"


class Cache:
    def __init__(self, directory: Path | str | None = None, version: str = ENGINE_VERSION,
                 enabled: bool = True):
        self.dir = Path(directory) if directory is not None else default_cache_dir()
        self.version = version
        self.enabled = enabled
        self.hits = self.misses = self.errors = 0

    def key(self, kind: str, descriptor: str) -> str:
        raw = json.dumps([kind, descriptor, self.version]).encode()
        return hashlib.sha256(raw).hexdigest()

    def _path(self, key: str) -> Path:
        return self.dir / key[:2] / f"{key}.json"

    def store(self, kind: str, descriptor: str, payload: dict) -> bool:
        if not self.enabled:
            return False
        body = json.dumps(payload, sort_keys=True, separators=(",", ":"))
        entry = {
            "kind": kind, "descriptor": descriptor, "version": self.version,
            "checksum": hashlib.sha256(body.encode()).hexdigest(), "payload": body,
        }
        path = self._path(self.key(kind, descriptor))
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            tmp = path.with_suffix(f".tmp{os.getpid()}")
            tmp.write_text(json.dumps(entry))
            os.replace(tmp, path)
            return True
        except OSError as exc:
            self.errors += 1
            log.warning("cache write failed (%s); continuing uncached", exc)
            return False

    def load(self, kind: str, descriptor: str) -> dict | None:
        if not self.enabled:
            return None
        path = self._path(self.key(kind, descriptor))
        try:
            text = path.read_text()
        except FileNotFoundError:
            self.misses += 1
            return None
        except OSError as exc:
            self.errors += 1
            log.warning("cache read failed (%s); recomputing", exc)
            return None
        try:
            entry = json.loads(text)
            body = entry["payload"]
            ok = (entry["version"] == self.version and entry["kind"] == kind
                  and entry["descriptor"] == descriptor
                  and hashlib.sha256(body.encode()).hexdigest() == entry["checksum"])
            payload = json.loads(body) if ok else None
        except (ValueError, KeyError, TypeError):
            payload = None
        if payload is None:
            self.misses += 1
            try:
                path.unlink()
            except OSError:
                pass
            return None
        self.hits += 1
        return payload
