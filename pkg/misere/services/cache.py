"""On-disk quotient cache.

One JSON file per (code, heaps) holding the catalog-shaped record of the
solve and a SHA-256 of that record. Files that fail to parse or whose hash
does not match are treated as misses.
"""

import hashlib
import json
import logging
import os
import tempfile
from pathlib import Path
from typing import Any

from misere import __version__
from misere.config import settings
from misere.core.exceptions import CacheError, MisereError
from misere.core.metrics import record_cache
from misere.solver.closed_set import QuotientSolution

logger = logging.getLogger(__name__)


def make_cache_key(*args: Any, prefix: str = "quotient", **kwargs: Any) -> str:
    """Deterministic file-safe key for the arguments."""
    key_parts = [str(arg) for arg in args]
    key_parts.extend(f"{k}={v}" for k, v in sorted(kwargs.items()))
    key_hash = hashlib.sha256(":".join(key_parts).encode()).hexdigest()[:16]
    return f"{prefix}-{key_hash}"


def content_hash(record: dict[str, Any]) -> str:
    return hashlib.sha256(json.dumps(record, sort_keys=True).encode()).hexdigest()


class QuotientCache:
    """Solved quotients keyed by code and heap count."""

    def __init__(self, directory: Path | None = None, enabled: bool | None = None):
        self.directory = Path(directory or settings.cache_dir)
        self.enabled = settings.cache_enabled if enabled is None else enabled

    def path(self, code: str, heaps: int) -> Path:
        return self.directory / f"{make_cache_key(code, heaps, version=__version__)}.json"

    def get(self, code: str, heaps: int) -> QuotientSolution | None:
        if not self.enabled:
            return None
        path = self.path(code, heaps)
        if not path.exists():
            record_cache("miss")
            return None
        try:
            payload = json.loads(path.read_text(encoding="utf-8"))
            record = payload["record"]
            if payload.get("hash") != content_hash(record):
                raise CacheError("content hash mismatch")
            solution = QuotientSolution.from_record(record)
        except (OSError, ValueError, KeyError, TypeError, MisereError) as e:
            logger.warning(f"ignoring corrupt cache file {path}: {e}")
            record_cache("corrupt")
            return None
        record_cache("hit")
        logger.debug(f"cache hit for {code} at {heaps} heaps")
        return solution

    def set(self, code: str, heaps: int, solution: QuotientSolution) -> bool:
        """Write atomically; False when the cache directory is unusable."""
        if not self.enabled:
            return False
        record = solution.to_record()
        payload = {"code": code, "heaps": heaps, "hash": content_hash(record), "record": record}
        try:
            self.directory.mkdir(parents=True, exist_ok=True)
            fd, tmp = tempfile.mkstemp(dir=self.directory, prefix=".tmp-", suffix=".json")
            try:
                with os.fdopen(fd, "w", encoding="utf-8") as f:
                    json.dump(payload, f, sort_keys=True)
                os.replace(tmp, self.path(code, heaps))
            except BaseException:
                Path(tmp).unlink(missing_ok=True)
                raise
        except OSError as e:
            logger.warning(f"could not write cache entry for {code}: {e}")
            return False
        return True

    def clear(self) -> int:
        removed = 0
        for path in self.directory.glob("quotient-*.json"):
            path.unlink(missing_ok=True)
            removed += 1
        return removed
