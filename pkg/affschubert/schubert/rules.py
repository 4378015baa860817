"""
schubert/rules.py
-----------------
Registry of the classification labels.

A label is a predicate on λ that, when it holds, guarantees X_λ is
palindromic.  The four built-in labels are registered on import; extra labels
can be added with :func:`register_label`::

    from affschubert.schubert.rules import ClassLabel, register_label

    @register_label
    class MyLabel(ClassLabel):
        id = "MyLabel"
        description = "Something palindromic"

        def holds(self, lam, engine):
            ...

Public API
----------
* :class:`ClassLabel`            — ABC every label subclasses.
* :func:`register_label`         — decorator / function registering a label.
* :func:`deregister_label`       — remove a label (mainly for tests).
* :func:`get_registered_labels`  — snapshot of the registry.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from typing import Dict, Type

from affschubert.lie.weyl import CorootElement
from affschubert.order.bruhat import BruhatEngine
from affschubert.schubert.chains import is_chain
from affschubert.schubert.cpo import is_cpo
from affschubert.schubert.spiral import is_spiral


# ---------------------------------------------------------------------------
# Registry
# ---------------------------------------------------------------------------

_LABEL_REGISTRY: Dict[str, Type["ClassLabel"]] = {}


def register_label(label_class: Type["ClassLabel"]) -> Type["ClassLabel"]:
    """
    Register a concrete :class:`ClassLabel` subclass.

    Args:
        label_class: Subclass defining ``id``, ``description`` and ``holds``.

    Returns:
        The same class, so this works as a decorator.

    Raises:
        TypeError:  If ``label_class`` is not a :class:`ClassLabel` subclass.
        ValueError: If the id is empty or already registered.
    """
    if not (isinstance(label_class, type) and issubclass(label_class, ClassLabel)):
        raise TypeError(
            f"register_label expects a ClassLabel subclass, got {label_class!r}"
        )
    label_id: str = label_class.id
    if not label_id:
        raise ValueError("ClassLabel subclass must define a non-empty 'id' attribute.")
    if label_id in _LABEL_REGISTRY:
        raise ValueError(f"A label with id={label_id!r} is already registered.")
    _LABEL_REGISTRY[label_id] = label_class
    return label_class


def deregister_label(label_id: str) -> None:
    """
    Raises:
        KeyError: If no label with ``label_id`` is registered.
    """
    if label_id not in _LABEL_REGISTRY:
        raise KeyError(f"No label with id={label_id!r} found in registry.")
    del _LABEL_REGISTRY[label_id]


def get_registered_labels() -> Dict[str, Type["ClassLabel"]]:
    """Shallow copy of the registry, label id → class, in registration order."""
    return dict(_LABEL_REGISTRY)


# ---------------------------------------------------------------------------
# Base class
# ---------------------------------------------------------------------------

class ClassLabel(ABC):
    """
    A sufficient condition for palindromy.

    Attributes:
        id:          Label written into verdicts (e.g. ``"CPO"``).
        description: Human-readable description.
        smooth:      Whether the label certifies smoothness.
    """

    id: str = ""
    description: str = ""
    smooth: bool = False

    @abstractmethod
    def holds(self, lam: CorootElement, engine: BruhatEngine) -> bool:
        """Return whether λ carries this label."""
        ...


# ---------------------------------------------------------------------------
# Built-in labels
# ---------------------------------------------------------------------------

@register_label
class CpoLabel(ClassLabel):
    id = "CPO"
    description = "Closed parabolic orbit"
    smooth = True

    def holds(self, lam: CorootElement, engine: BruhatEngine) -> bool:
        return is_cpo(lam)


@register_label
class ChainLabel(ClassLabel):
    id = "Chain"
    description = "Poincaré polynomial 1 + t + ... + t^d"

    def holds(self, lam: CorootElement, engine: BruhatEngine) -> bool:
        return is_chain(lam, engine)


@register_label
class SpiralLabel(ClassLabel):
    id = "Spiral"
    description = "Type A spiral class"

    def holds(self, lam: CorootElement, engine: BruhatEngine) -> bool:
        return is_spiral(lam)


@register_label
class ExceptionalB3Label(ClassLabel):
    id = "ExceptionalB3"
    description = "The singular palindromic (3,0,-1) in type B3"

    def holds(self, lam: CorootElement, engine: BruhatEngine) -> bool:
        return lam.rs.key == ("B", 3) and lam.coords == (3, 0, -1)
