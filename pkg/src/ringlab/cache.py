"""Persisted result cache keyed by (tool version, ring spec, operation).

The cache is an optimization only: every value it serves was computed by the
same code path that would recompute it, and a version bump invalidates the
whole file. Writes are atomic (write-temp-rename).
"""

from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path

ENV_VAR = "RINGLAB_CACHE"


def default_cache_path():
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "ringlab" / "results.json"


class ResultCache:
    def __init__(self, path, version):
        self.path = Path(path)
        self.version = version
        self._entries = None
        self._dirty = False

    def _load(self):
        if self._entries is not None:
            return
        self._entries = {}
        try:
            with open(self.path, "r", encoding="utf-8") as fh:
                data = json.load(fh)
        except (OSError, ValueError):
            return
        if data.get("version") == self.version:
            self._entries = dict(data.get("entries", {}))

    @staticmethod
    def _key(spec, operation):
        return f"{spec}||{operation}"

    def get(self, spec, operation):
        self._load()
        return self._entries.get(self._key(spec, operation))

    def put(self, spec, operation, value):
        self._load()
        self._entries[self._key(spec, operation)] = value
        self._dirty = True

    def save(self):
        if not self._dirty:
            return
        self.path.parent.mkdir(parents=True, exist_ok=True)
        payload = {"version": self.version, "entries": self._entries}
        fd, tmp = tempfile.mkstemp(dir=str(self.path.parent), suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                json.dump(payload, fh, sort_keys=True)
            os.replace(tmp, self.path)
        finally:
            if os.path.exists(tmp):
                os.unlink(tmp)
        self._dirty = False


class NullCache:
    """Cache stand-in used by --no-cache and by worker processes."""

    def get(self, spec, operation):
        return None

    def put(self, spec, operation, value):
        pass

    def save(self):
        pass
