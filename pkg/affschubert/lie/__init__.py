"""lie sub-package — root systems, the coroot lattice as W̃^S, and reflection moves."""

from affschubert.lie.rootsys import Root, RootSystem, build_root_system
from affschubert.lie.weyl import CorootElement, ReducedWord, fire, lengthS, reflect, word_for

__all__ = [
    "Root",
    "RootSystem",
    "build_root_system",
    "CorootElement",
    "ReducedWord",
    "fire",
    "lengthS",
    "reflect",
    "word_for",
]
