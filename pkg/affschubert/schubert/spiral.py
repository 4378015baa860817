"""
schubert/spiral.py
------------------
Spiral classes in type A.

λ is a spiral class when its labelled affine diagram has exactly two nonzero
nodes, adjacent on the cycle, whose labels sum to 1.  The representatives
λ_{n,k} have Poincaré polynomial [n+k over n]_t.
"""

from __future__ import annotations

import logging

from affschubert.core.errors import WrongType
from affschubert.lie.rootsys import RootSystem, build_root_system
from affschubert.lie.weyl import CorootElement

logger = logging.getLogger(__name__)

PLAIN = "plain"
PRIME = "prime"
FAMILIES = (PLAIN, PRIME)


def spiral_lambda(
    n: int, k: int, family: str = PLAIN, type_label: str = "A"
) -> CorootElement:
    """
    The spiral representative λ_{n,k} in A_n.

    With k = r(n+1) + i and 0 <= i <= n:

    * i = 0: (−k, 0, …, 0)
    * i = n: (0, …, 0, k+1)
    * otherwise k+1 at position i and −k at position i+1.

    The ``prime`` family is the image under the diagram flip s_j ↔ s_{n+1−j}.

    Raises:
        WrongType: Unless *type_label* is ``"A"``.
        ValueError: If n < 1, k < 1 or the family is unknown.
    """
    if type_label != "A":
        raise WrongType(f"Spiral classes are defined in type A only, not {type_label}{n}")
    if n < 1 or k < 1:
        raise ValueError(f"spiral_lambda needs n >= 1 and k >= 1, got n={n}, k={k}")
    if family not in FAMILIES:
        raise ValueError(f"Unknown spiral family {family!r}; expected one of {FAMILIES}")
    rs = build_root_system("A", n)
    i = k % (n + 1)
    coords = [0] * n
    if i == 0:
        coords[0] = -k
    elif i == n:
        coords[n - 1] = k + 1
    else:
        coords[i - 1] = k + 1
        coords[i] = -k
    if family == PRIME:
        coords.reverse()
    return CorootElement(rs, tuple(coords))


def is_spiral(lam: CorootElement) -> bool:
    """
    True iff λ is a type A spiral class.

    Anti-dominant classes −k(n+1)ω₁∨ and −k(n+1)ω_n∨ satisfy the same
    two-node test.
    """
    rs = lam.rs
    if rs.type_label != "A":
        return False
    labels = lam.labels()
    nonzero = [s for s, v in enumerate(labels) if v != 0]
    if len(nonzero) != 2:
        return False
    s, t = nonzero
    return rs.affine_graph.has_edge(s, t) and labels[s] + labels[t] == 1


def spiral_for(rs: RootSystem, k: int, family: str = PLAIN) -> CorootElement:
    """
    :func:`spiral_lambda` for an already built root system.

    Raises:
        WrongType: Unless *rs* has type A.
    """
    return spiral_lambda(rs.rank, k, family, type_label=rs.type_label)
