"""
core/errors.py
--------------
Exception hierarchy shared by every affschubert module.

Argument errors subclass :class:`ValueError` and resource errors subclass
:class:`RuntimeError`, so callers that only know the builtin types still catch
them.
"""

from __future__ import annotations


class SchubertError(Exception):
    """Base class for all affschubert errors."""


# ---------------------------------------------------------------------------
# Argument errors
# ---------------------------------------------------------------------------

class UnsupportedType(SchubertError, ValueError):
    """The (type, rank) pair does not name a supported root system."""


class LengthMismatch(SchubertError, ValueError):
    """A coordinate vector does not have one entry per simple root."""


class NotInCorootLattice(SchubertError, ValueError):
    """The coordinates do not describe an element of the coroot lattice."""


class NotARoot(SchubertError, ValueError):
    """A coefficient vector is not a root of the given system."""


class SystemMismatch(SchubertError, ValueError):
    """Two objects belong to different root systems."""


class NotReduced(SchubertError, ValueError):
    """A word is not a reduced firing-up path from 0."""


class NotAnAscent(SchubertError, ValueError):
    """The node is not an ascent of the element."""


class WrongType(SchubertError, ValueError):
    """The operation is only defined for another Lie type."""


class NotIMinimal(SchubertError, ValueError):
    """The element is not minimal in its parabolic orbit."""


# ---------------------------------------------------------------------------
# Resource errors
# ---------------------------------------------------------------------------

class ResourceLimit(SchubertError, RuntimeError):
    """An enumeration grew past its configured member cap."""


class OracleCapExceeded(SchubertError, RuntimeError):
    """The subword oracle was asked about an element longer than its cap."""
