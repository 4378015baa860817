"""
core/store.py
-------------
File-based cache of classification verdicts for the command-line front end.

Verdicts are stored as JSON lines, one
:class:`~affschubert.core.result_schema.ClassificationVerdict` per line, keyed
by (type, rank, coords).  The cache is an optimisation only: a missing file
is an empty cache, and unreadable or corrupt content is skipped with a
warning.
"""

from __future__ import annotations

import json
import logging
import os
from pathlib import Path
from typing import Dict, Optional, Tuple, Union

from affschubert.core.result_schema import ClassificationVerdict

logger = logging.getLogger(__name__)

# Default cache location when neither --cache-path nor $SCHUBERT_CACHE is set
DEFAULT_CACHE_PATH = Path.home() / ".affschubert" / "verdicts.jsonl"

VerdictKey = Tuple[str, int, Tuple[int, ...]]


class VerdictCache:
    """
    Persists :class:`ClassificationVerdict` objects as a JSON-lines file.

    File layout::

        {"dim": 9, "labels": ["ExceptionalB3"], "lambda": [3, 0, -1], ...}
        {"dim": 2, "labels": ["CPO", "Chain", "Spiral"], "lambda": [-1, 2], ...}

    Args:
        path: The cache file.  Defaults to ``~/.affschubert/verdicts.jsonl``.
    """

    def __init__(self, path: Optional[Union[str, Path]] = None) -> None:
        self._path: Path = Path(path) if path else DEFAULT_CACHE_PATH
        self._entries: Optional[Dict[VerdictKey, ClassificationVerdict]] = None

    @property
    def path(self) -> Path:
        return self._path

    # ------------------------------------------------------------------
    # Public API
    # ------------------------------------------------------------------

    def get(
        self, type_label: str, rank: int, coords: Tuple[int, ...]
    ) -> Optional[ClassificationVerdict]:
        """Return the cached verdict for (type, rank, coords), if any."""
        return self._load().get((type_label, rank, tuple(coords)))

    def put(self, verdict: ClassificationVerdict) -> None:
        """
        Add *verdict* and rewrite the cache file.

        Write failures are logged and otherwise ignored.
        """
        entries = self._load()
        existing = entries.get(verdict.key)
        if existing is not None and existing.to_dict() == verdict.to_dict():
            logger.debug("Verdict for %s already cached — skipping write.", verdict.key)
            return
        entries[verdict.key] = verdict
        try:
            self._path.parent.mkdir(parents=True, exist_ok=True)
            self._write_raw(self._path, entries)
        except OSError as exc:
            logger.warning("Could not write verdict cache %s: %s", self._path, exc)

    def clear(self) -> bool:
        """
        Delete the cache file.

        Returns:
            ``True`` if a file was removed.
        """
        self._entries = {}
        if self._path.exists():
            self._path.unlink()
            logger.debug("Removed verdict cache %s", self._path)
            return True
        return False

    def __len__(self) -> int:
        return len(self._load())

    def __contains__(self, key: object) -> bool:
        return key in self._load()

    # ------------------------------------------------------------------
    # Internal helpers
    # ------------------------------------------------------------------

    def _load(self) -> Dict[VerdictKey, ClassificationVerdict]:
        if self._entries is None:
            self._entries = self._load_raw(self._path)
        return self._entries

    @staticmethod
    def _load_raw(path: Path) -> Dict[VerdictKey, ClassificationVerdict]:
        """
        Read every valid line of *path*.

        Missing files give an empty cache; corrupt lines and unreadable files
        are logged at WARNING and skipped.
        """
        entries: Dict[VerdictKey, ClassificationVerdict] = {}
        if not path.exists():
            return entries
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as exc:
            logger.warning(
                "Unreadable verdict cache at %s — ignoring it. Reason: %s", path, exc
            )
            return entries

        for lineno, line in enumerate(text.splitlines(), start=1):
            if not line.strip():
                continue
            try:
                data = json.loads(line)
                if not isinstance(data, dict):
                    raise ValueError("line is not a JSON object")
                verdict = ClassificationVerdict.from_dict(data)
            except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
                logger.warning(
                    "Skipping corrupt verdict cache line %s:%d: %s", path, lineno, exc
                )
                continue
            entries[verdict.key] = verdict
        return entries

    @staticmethod
    def _write_raw(path: Path, entries: Dict[VerdictKey, ClassificationVerdict]) -> None:
        """
        Atomically write all entries, sorted by key, to *path*.

        Args:
            path:    Destination path.
            entries: Verdicts to persist.
        """
        tmp_path = path.with_suffix(".tmp")
        lines = [
            json.dumps(entries[key].to_dict(), sort_keys=True, ensure_ascii=False)
            for key in sorted(entries)
        ]
        try:
            tmp_path.write_text("\n".join(lines) + "\n", encoding="utf-8")
            os.replace(tmp_path, path)  # atomic on POSIX
        finally:
            if tmp_path.exists():
                tmp_path.unlink(missing_ok=True)

    def __repr__(self) -> str:
        return f"VerdictCache(path={self._path!r})"
