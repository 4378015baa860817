"""
order/series.py
---------------
Generating functions attached to the affine Grassmannian: the Bott series
Π (1 − t^{e_i})⁻¹ over the exponents, the fork statistics (k_G, a_{k_G}) and
Gaussian binomial coefficients.

All series work is truncated integer arithmetic on coefficient lists.
"""

from __future__ import annotations

import enum
import json
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Dict, Optional, Tuple, Union

import numpy as np

from affschubert.lie.rootsys import RootSystem, build_root_system
from affschubert.lie.weyl import fire_coords, label_of
from affschubert.order.polynomial import IntPolynomial

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# Bott series
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SeriesPrefix:
    """
    A power series known through degree ``cutoff``.

    Attributes:
        coeffs: Coefficients c_0..c_cutoff (c_0 = 1 for the Bott series).
        cutoff: The last degree included.
    """

    coeffs: Tuple[int, ...]
    cutoff: int

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k]

    def __len__(self) -> int:
        return len(self.coeffs)

    def to_polynomial(self) -> IntPolynomial:
        return IntPolynomial(self.coeffs)

    def to_dict(self) -> Dict[str, Any]:
        return {"cutoff": self.cutoff, "coeffs": list(self.coeffs)}

    def to_json(self, indent: int = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)


def _bott_coeffs(exponents: Tuple[int, ...], cutoff: int) -> Tuple[int, ...]:
    series = np.zeros(cutoff + 1, dtype=np.int64)
    series[0] = 1
    for e in exponents:
        # Multiplying by 1/(1 − t^e) is a running sum with stride e.
        for k in range(e, cutoff + 1):
            series[k] += series[k - e]
    return tuple(int(c) for c in series)


def bott_prefix(rs: RootSystem, cutoff: int) -> SeriesPrefix:
    """
    Expand Π_i (1 − t^{e_i})⁻¹ through degree *cutoff*.

    This is the length generating function Σ_λ t^{ℓ^S(λ)} of Q∨.

    Raises:
        ValueError: If *cutoff* is negative.
    """
    if cutoff < 0:
        raise ValueError(f"cutoff must be >= 0, got {cutoff}")
    return SeriesPrefix(coeffs=_bott_coeffs(tuple(rs.exponents), cutoff), cutoff=cutoff)


# ---------------------------------------------------------------------------
# Fork statistics
# ---------------------------------------------------------------------------

class Unbounded(enum.Enum):
    """k_G of A₁, where the poset never branches."""

    INFINITE = "infinite"

    def __str__(self) -> str:
        return "∞"


KG = Union[int, Unbounded]


@dataclass(frozen=True)
class ForkStats:
    """
    k_G, the first level of Q∨ with more than one element, and a_{k_G}, its size.

    For A₁ ``k_G`` is :attr:`Unbounded.INFINITE` and ``a`` is ``None``.
    """

    k_G: KG
    a: Optional[int]

    @property
    def bounded(self) -> bool:
        return self.k_G is not Unbounded.INFINITE

    def to_dict(self) -> Dict[str, Any]:
        k = self.k_G if isinstance(self.k_G, int) else self.k_G.value
        return {"k_G": k, "a": self.a}


def fork_stats_from_series(rs: RootSystem) -> ForkStats:
    """Minimal k with a Bott coefficient above 1, and that coefficient."""
    if rs.rank == 1:
        return ForkStats(Unbounded.INFINITE, None)
    prefix = bott_prefix(rs, max(rs.exponents) + 1)
    for k, c in enumerate(prefix.coeffs):
        if c > 1:
            return ForkStats(k, c)
    raise RuntimeError(f"Bott series of {rs.name} never exceeds 1")


def fork_stats_from_path(rs: RootSystem) -> ForkStats:
    """
    Walk up from 0 while there is exactly one ascent.

    The walk fires k_G − 1 nodes; at the element reached, a_{k_G} is the
    number of ascents.  In A₁ every element has one ascent, so the walk
    never forks.
    """
    if rs.rank == 1:
        return ForkStats(Unbounded.INFINITE, None)
    coords = (0,) * rs.rank
    steps = 0
    while True:
        ups = [s for s in range(rs.rank + 1) if label_of(rs, coords, s) > 0]
        if len(ups) != 1:
            return ForkStats(steps + 1, len(ups))
        coords = fire_coords(rs, coords, ups[0])
        steps += 1


@lru_cache(maxsize=None)
def _fork_stats(type_label: str, rank: int) -> ForkStats:
    rs = build_root_system(type_label, rank)
    by_series = fork_stats_from_series(rs)
    by_path = fork_stats_from_path(rs)
    if by_series != by_path:
        raise RuntimeError(
            f"Fork statistics of {rs.name} disagree: series {by_series}, path {by_path}"
        )
    logger.debug("%s fork stats: %s", rs.name, by_series)
    return by_series


def fork_stats(rs: RootSystem) -> ForkStats:
    """
    Return (k_G, a_{k_G}), computed from the Bott series and from the path walk.

    Raises:
        RuntimeError: If the two computations disagree.
    """
    return _fork_stats(rs.type_label, rs.rank)


# ---------------------------------------------------------------------------
# Gaussian binomials
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _pascal(n: int, k: int) -> IntPolynomial:
    # G(n, k) = G(n, k−1) + t^k G(n−1, k)
    if n == 0 or k == 0:
        return IntPolynomial.one()
    return _pascal(n, k - 1) + _pascal(n - 1, k).shift(k)


def q_binomial(m: int, n: int) -> IntPolynomial:
    """
    The Gaussian binomial [m over n]_t.

    Raises:
        ValueError: Unless 0 <= n <= m.
    """
    if not 0 <= n <= m:
        raise ValueError(f"q_binomial needs 0 <= n <= m, got m={m}, n={n}")
    return _pascal(n, m - n)
