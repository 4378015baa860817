"""
affschubert — Schubert varieties in affine Grassmannians v0.1
"""

__version__ = "0.1.0"
__author__ = "affschubert"

from affschubert.core.config import DEFAULT_CONFIG, SchubertConfig
from affschubert.lie.rootsys import build_root_system
from affschubert.lie.weyl import CorootElement

__all__ = [
    "SchubertConfig",
    "DEFAULT_CONFIG",
    "build_root_system",
    "CorootElement",
    "__version__",
]
