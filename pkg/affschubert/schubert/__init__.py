"""schubert sub-package — palindromic classes, labels and the classification engine."""

from affschubert.schubert.engine import ClassificationEngine, classify
from affschubert.schubert.rules import ClassLabel, get_registered_labels, register_label

__all__ = [
    "ClassificationEngine",
    "classify",
    "ClassLabel",
    "register_label",
    "get_registered_labels",
]
