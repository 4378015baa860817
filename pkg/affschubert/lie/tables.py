"""
lie/tables.py
-------------
Static per-type data for the finite root systems A–G in Bourbaki numbering.

Only what cannot be derived is tabulated here: which nodes are joined, the
relative squared length of each simple root, and the exponents.  Cartan
integers, positive roots, marks and affine attachments are all computed in
:mod:`affschubert.lie.rootsys`.
"""

from __future__ import annotations

from typing import Dict, List, Tuple

from affschubert.core.errors import UnsupportedType

TYPE_LABELS = ("A", "B", "C", "D", "E", "F", "G")

# Squared lengths are scaled so that every inner product is an integer:
# simply laced roots have 2, B/C/F long 4 and short 2, G2 long 6 and short 2.
_LONG_BCF = 4
_SHORT_BCF = 2


def check_supported(type_label: str, rank: int) -> None:
    """
    Raise :class:`UnsupportedType` unless (type_label, rank) is a supported system.

    Supported: A_n (n >= 1), B_n and C_n (n >= 2), D_n (n >= 4), E6, E7, E8, F4, G2.
    """
    ok = (
        (type_label == "A" and rank >= 1)
        or (type_label in ("B", "C") and rank >= 2)
        or (type_label == "D" and rank >= 4)
        or (type_label == "E" and rank in (6, 7, 8))
        or (type_label == "F" and rank == 4)
        or (type_label == "G" and rank == 2)
    )
    if not ok:
        raise UnsupportedType(f"Unsupported root system {type_label}{rank}")


def dynkin_edges(type_label: str, rank: int) -> List[Tuple[int, int]]:
    """Return the (1-based) edges of the finite Dynkin diagram."""
    check_supported(type_label, rank)
    n = rank
    if type_label in ("A", "B", "C", "F", "G"):
        return [(i, i + 1) for i in range(1, n)]
    if type_label == "D":
        edges = [(i, i + 1) for i in range(1, n - 1)]
        edges.append((n - 2, n))
        return edges
    # E-series: 1-3-4-5-6-7-8 with the off-line node 2 attached to 4.
    edges = [(1, 3), (2, 4), (3, 4)]
    edges += [(i, i + 1) for i in range(4, n)]
    return edges


def squared_lengths(type_label: str, rank: int) -> List[int]:
    """Return the scaled squared length of each simple root α_1..α_n."""
    check_supported(type_label, rank)
    n = rank
    if type_label == "B":
        return [_LONG_BCF] * (n - 1) + [_SHORT_BCF]
    if type_label == "C":
        return [_SHORT_BCF] * (n - 1) + [_LONG_BCF]
    if type_label == "F":
        return [_LONG_BCF, _LONG_BCF, _SHORT_BCF, _SHORT_BCF]
    if type_label == "G":
        return [2, 6]
    return [2] * n


_EXCEPTIONAL_EXPONENTS: Dict[Tuple[str, int], List[int]] = {
    ("E", 6): [1, 4, 5, 7, 8, 11],
    ("E", 7): [1, 5, 7, 9, 11, 13, 17],
    ("E", 8): [1, 7, 11, 13, 17, 19, 23, 29],
    ("F", 4): [1, 5, 7, 11],
    ("G", 2): [1, 5],
}


def exponents(type_label: str, rank: int) -> List[int]:
    """Return the exponents e_1 <= ... <= e_n of the finite Weyl group."""
    check_supported(type_label, rank)
    n = rank
    if type_label == "A":
        return list(range(1, n + 1))
    if type_label in ("B", "C"):
        return list(range(1, 2 * n, 2))
    if type_label == "D":
        return sorted(list(range(1, 2 * n - 2, 2)) + [n - 1])
    return list(_EXCEPTIONAL_EXPONENTS[(type_label, rank)])


def degrees(type_label: str, rank: int) -> List[int]:
    """Return the degrees d_i = e_i + 1 of the finite Weyl group."""
    return [e + 1 for e in exponents(type_label, rank)]


def finite_types_of_rank(rank: int) -> List[Tuple[str, int]]:
    """All supported (type, rank) pairs of the given rank, B excluded as a twin of C."""
    candidates = [("A", rank), ("C", rank), ("D", rank), ("E", rank), ("F", rank), ("G", rank)]
    out = []
    for label, r in candidates:
        try:
            check_supported(label, r)
        except UnsupportedType:
            continue
        out.append((label, r))
    return out
