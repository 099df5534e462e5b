"""Content-addressed result cache with atomic writes and verified reads.

Entries are keyed by the SHA-256 of an operation id plus the exact input
text, so changing either the computation or the polyhedron yields a fresh
key. Every entry stores a digest of its own payload; a read whose payload
fails the digest check is treated as a miss, so a torn or tampered file
can only trigger recomputation, never a wrong answer. Writes go through a
temporary file in the same directory followed by os.replace, which keeps
concurrent readers safe and makes the last writer win per key.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from pathlib import Path

ENV_CACHE_DIR = "CIRCUITWALKS_CACHE_DIR"


def default_cache_dir() -> Path:
    """Cache root: $CIRCUITWALKS_CACHE_DIR, else the user cache directory."""
    env = os.environ.get(ENV_CACHE_DIR)
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(os.path.expanduser("~"), ".cache")
    return Path(base) / "circuitwalks"


def cache_key(op: str, payload: str) -> str:
    """Hex key for an operation id applied to an exact input text."""
    h = hashlib.sha256()
    h.update(op.encode())
    h.update(b"\x00")
    h.update(payload.encode())
    return h.hexdigest()


def _digest(value: str) -> str:
    return hashlib.sha256(value.encode()).hexdigest()


def cache_get(key: str, root: str | os.PathLike | None = None) -> str | None:
    """Stored value for a key, or None on absence, corruption, or mismatch."""
    path = Path(root) if root is not None else default_cache_dir()
    try:
        entry = json.loads((path / f"{key}.json").read_text())
        value = entry["value"]
        digest = entry["digest"]
    except (OSError, ValueError, KeyError, TypeError):
        return None
    if not isinstance(value, str) or not isinstance(digest, str):
        return None
    if _digest(value) != digest:
        return None
    return value


def cache_put(key: str, value: str, root: str | os.PathLike | None = None) -> None:
    """Persist a value under a key atomically (temp file + rename)."""
    path = Path(root) if root is not None else default_cache_dir()
    path.mkdir(parents=True, exist_ok=True)
    entry = {"digest": _digest(value), "value": value}
    fd, tmp = tempfile.mkstemp(dir=path, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as f:
            json.dump(entry, f)
        os.replace(tmp, path / f"{key}.json")
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


class ResultCache:
    """Bound view of the cache rooted at a fixed directory.

    root=None resolves the default lazily on each call, so tests that
    repoint the environment variable see the change immediately.
    """

    def __init__(self, root: str | os.PathLike | None = None):
        self.root = Path(root) if root is not None else None

    def get(self, op: str, payload: str) -> str | None:
        return cache_get(cache_key(op, payload), self.root)

    def put(self, op: str, payload: str, value: str) -> None:
        cache_put(cache_key(op, payload), value, self.root)
