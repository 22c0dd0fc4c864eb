"""On-disk cache of reduced Gröbner bases, keyed by a content hash.

One JSON file per entry.  Writes go to a temp file and are renamed into place,
so concurrent writers never leave a half-written entry.  A corrupt or foreign
entry is deleted and recomputed; an unwritable directory only costs a warning.
"""
from __future__ import annotations

import json
import logging
import os
import tempfile
import warnings
from pathlib import Path
from typing import Optional, Sequence, Tuple

from . import __version__, groebner
from .errors import ParseError
from .polyexpr import parse_poly, print_poly
from .polyring import MonomialOrder, Polynomial, RingSpec

log = logging.getLogger(__name__)

DEFAULT_DIR = ".spl-cache"


class CacheWarning(UserWarning):
    pass


class DiskCache:
    def __init__(self, root=None):
        self.root = Path(root or os.environ.get("SPL_CACHE_DIR") or DEFAULT_DIR)
        self.hits = 0
        self.misses = 0
        self.disabled = False

    def _path(self, key: str) -> Path:
        return self.root / f"{key}.json"

    def _warn(self, msg: str):
        if not self.disabled:
            warnings.warn(f"spl cache: {msg}; continuing without cache writes", CacheWarning, stacklevel=3)
        self.disabled = True

    def get(self, key: str) -> Optional[dict]:
        p = self._path(key)
        try:
            raw = p.read_text()
        except FileNotFoundError:
            self.misses += 1
            return None
        except OSError as e:
            log.warning("cache read failed for %s: %s", key, e)
            self.misses += 1
            return None
        try:
            entry = json.loads(raw)
            if entry.get("key") != key or not isinstance(entry.get("basis"), list):
                raise ValueError("malformed entry")
        except ValueError:
            log.warning("corrupt cache entry %s removed", p)
            try:
                p.unlink()
            except OSError:
                pass
            self.misses += 1
            return None
        if entry.get("tool_version") != __version__:
            self.misses += 1
            return None
        self.hits += 1
        return entry

    def put(self, key: str, entry: dict) -> bool:
        if self.disabled:
            return False
        entry = dict(entry, key=key, tool_version=__version__)
        try:
            self.root.mkdir(parents=True, exist_ok=True)
            fd, tmp = tempfile.mkstemp(dir=self.root, prefix=".tmp-", suffix=".json")
            with os.fdopen(fd, "w") as fh:
                json.dump(entry, fh, sort_keys=True)
            os.replace(tmp, self._path(key))
            return True
        except OSError as e:
            self._warn(str(e))
            return False

    # interface used by groebner.buchberger
    def get_basis(self, key: str, ring: RingSpec) -> Optional[Tuple[Polynomial, ...]]:
        entry = self.get(key)
        if entry is None:
            return None
        if entry.get("variables") != list(ring.variables) or entry.get("order") != ring.order.name:
            return None
        try:
            return tuple(parse_poly(s, ring) for s in entry["basis"])
        except ParseError:
            try:
                self._path(key).unlink()
            except OSError:
                pass
            return None

    def put_basis(self, key: str, ring: RingSpec, order: MonomialOrder, basis: Sequence[Polynomial]) -> bool:
        return self.put(key, {"variables": list(ring.variables), "order": order.name,
                              "basis": [print_poly(g) for g in basis]})

    def scope(self):
        return groebner.cache_scope(self)
