"""
core/config_hashing.py
----------------------
Deterministic hashing of a :class:`~affschubert.core.config.SchubertConfig`
so that verification reports record exactly which limits were in force.
"""

from __future__ import annotations

import dataclasses
import hashlib
import json
from typing import Any, Dict

from affschubert.core.config import SchubertConfig


def _config_to_serialisable(config: SchubertConfig) -> Dict[str, Any]:
    """
    Convert a :class:`SchubertConfig` to a plain dictionary with sorted keys.

    ``cache_path`` is excluded: where verdicts are cached never changes them.
    """
    raw: Dict[str, Any] = dataclasses.asdict(config)
    raw.pop("cache_path", None)
    return {k: raw[k] for k in sorted(raw)}


def compute_config_hash(config: SchubertConfig) -> str:
    """
    Compute a deterministic SHA-256 hash of a :class:`SchubertConfig`.

    Args:
        config: The configuration to hash.

    Returns:
        Lowercase hex digest string (64 characters).

    Example::

        from affschubert.core.config import SchubertConfig
        from affschubert.core.config_hashing import compute_config_hash

        h = compute_config_hash(SchubertConfig())
        # h == compute_config_hash(SchubertConfig())  # always True
    """
    serialisable = _config_to_serialisable(config)
    canonical_json = json.dumps(serialisable, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical_json.encode("utf-8")).hexdigest()
