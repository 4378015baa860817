"""
core/config.py
--------------
Centralized configuration management for the affschubert toolkit.
"""

from __future__ import annotations

import dataclasses
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Optional, Union

import yaml

#: Environment variable that overrides :attr:`SchubertConfig.cache_path`.
CACHE_ENV_VAR = "SCHUBERT_CACHE"


@dataclass(frozen=True)
class SchubertConfig:
    """
    Configuration object for enumeration, caching and the comparison oracle.

    Attributes:
        ideal_member_cap: Maximum number of members an order ideal may reach
                          before :class:`~affschubert.core.errors.ResourceLimit`.
        level_member_cap: Maximum number of elements ``enumerate_levels`` may
                          collect across all levels.
        oracle_cap:       Largest ``lengthS`` accepted by the subword oracle.
        cache_size:       Entries kept by each least-recently-used memo cache.
        window_scale:     Multiplier on the reflection k-window used for covers.
        cache_path:       Optional JSON-lines verdict cache used by the CLI.
    """

    ideal_member_cap: int = 2_000_000
    level_member_cap: int = 2_000_000
    oracle_cap: int = 60
    cache_size: int = 8192
    window_scale: int = 1
    cache_path: Optional[str] = None

    def validate(self) -> None:
        """Validate configuration values are within acceptable ranges."""
        if self.ideal_member_cap <= 0:
            raise ValueError("ideal_member_cap must be positive.")
        if self.level_member_cap <= 0:
            raise ValueError("level_member_cap must be positive.")
        if self.oracle_cap < 0:
            raise ValueError("oracle_cap must be non-negative.")
        if self.cache_size <= 0:
            raise ValueError("cache_size must be positive.")
        if self.window_scale < 1:
            raise ValueError(f"window_scale must be >= 1, got {self.window_scale}")

    def with_env_overrides(self) -> "SchubertConfig":
        """Return a copy whose ``cache_path`` honours ``$SCHUBERT_CACHE``."""
        env_path = os.environ.get(CACHE_ENV_VAR)
        if env_path:
            return dataclasses.replace(self, cache_path=env_path)
        return self

    @classmethod
    def from_yaml(cls, path: Union[str, Path]) -> "SchubertConfig":
        """
        Load a configuration from a YAML mapping.

        Expected YAML structure::

            ideal_member_cap: 500000
            cache_size: 4096
            window_scale: 1

        Args:
            path: Path to the YAML file.

        Returns:
            A validated :class:`SchubertConfig`.

        Raises:
            FileNotFoundError: If *path* does not exist.
            ValueError:        If the file is not a mapping, has unknown keys,
                               or holds out-of-range values.
        """
        config_path = Path(path)
        if not config_path.exists():
            raise FileNotFoundError(f"Config file not found: {config_path}")

        try:
            with open(config_path, "r", encoding="utf-8") as f:
                data = yaml.safe_load(f)
        except yaml.YAMLError as exc:
            raise ValueError(f"Failed to parse config YAML: {exc}") from exc

        if data is None:
            data = {}
        if not isinstance(data, dict):
            raise ValueError("Config file must be a YAML dictionary.")

        known = {f.name for f in dataclasses.fields(cls)}
        unknown = sorted(set(data) - known)
        if unknown:
            raise ValueError(f"Unknown config keys: {', '.join(unknown)}")

        config = cls(**data)
        config.validate()
        return config

    def to_dict(self) -> Dict[str, Any]:
        return dataclasses.asdict(self)


# Singleton default config; callers may pass their own instance.
DEFAULT_CONFIG = SchubertConfig()
