"""
schubert/chevalley.py
---------------------
Chevalley coefficients for simple ascents and the cup sequences of chains.

For an ascent s of λ, the coefficient of [X_{sλ}] in y₁·[X_λ] is
c_s · (label of s on λ), with c_s = 1 on long nodes, 2 on short nodes in
types B, C, F and 3 on the short node of G₂.
"""

from __future__ import annotations

import logging
from typing import List, Sequence

from affschubert.core.errors import NotAnAscent
from affschubert.lie.weyl import CorootElement, fire_coords, label_of, word_for

logger = logging.getLogger(__name__)


def chevalley_coeff(lam: CorootElement, node: int) -> int:
    """
    Chevalley coefficient of the simple ascent λ ↑ sλ at *node*.

    Raises:
        NotAnAscent: If *node* is not a positive node of λ.
    """
    rs = lam.rs
    if not 0 <= node <= rs.rank:
        raise ValueError(f"{rs.name} has no node s{node}")
    value = lam.label(node)
    if value <= 0:
        raise NotAnAscent(f"s{node} is not an ascent of {lam} (label {value})")
    return rs.chevalley_constant(node) * value


def cup_sequence(lam: CorootElement) -> List[int]:
    """
    (a₁, …, a_m) along the firing-up order of λ's reduced word.

    a_k is the Chevalley coefficient of the k-th firing, taken at the element
    reached after k − 1 firings.  For a chain this is y₁·y_{k−1} = a_k y_k.
    """
    rs = lam.rs
    coords = (0,) * rs.rank
    out: List[int] = []
    for node in word_for(lam).firing_order():
        out.append(rs.chevalley_constant(node) * label_of(rs, coords, node))
        coords = fire_coords(rs, coords, node)
    return out


def cup_products(sequence: Sequence[int]) -> List[int]:
    """Partial products c_0 = 1, c_k = a₁⋯a_k."""
    out = [1]
    for a in sequence:
        out.append(out[-1] * a)
    return out
