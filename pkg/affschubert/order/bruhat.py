"""
order/bruhat.py
---------------
Bruhat order on Q∨ ≅ W̃/W: covers, order ideals [0, λ], Poincaré
polynomials and the independent subword comparison.

Covers are found by sweeping every reflection r_{k,β} through a k-window
wide enough to contain all of them and keeping the results whose ℓ^S drops by
exactly one.  The sweep is vectorised per β with numpy.

:class:`BruhatEngine` owns the memo caches, so two engines built from
different :class:`~affschubert.core.config.SchubertConfig` instances never
share state.  The module-level functions use one lazily created default
engine.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

import networkx as nx
import numpy as np

from affschubert.core.config import DEFAULT_CONFIG, SchubertConfig
from affschubert.core.errors import OracleCapExceeded, ResourceLimit, SystemMismatch
from affschubert.lie.rootsys import RootSystem, build_root_system
from affschubert.lie.weyl import (
    Coords,
    CorootElement,
    fire_coords,
    label_of,
    lengthS_of,
    root_values,
    sort_key,
)
from affschubert.order.polynomial import IntPolynomial, dual_polynomial
from affschubert.order.series import Unbounded, fork_stats

logger = logging.getLogger(__name__)

__all__ = [
    "BruhatEngine",
    "OrderIdeal",
    "covers",
    "order_ideal",
    "poincare_polynomial",
    "is_palindromic",
    "dual_polynomial",
    "bruhat_leq",
    "subword_leq",
    "enumerate_levels",
    "forks_too_soon",
    "default_engine",
]


# ---------------------------------------------------------------------------
# Order ideals
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class OrderIdeal:
    """
    The Bruhat interval [0, λ], i.e. the cells of the Schubert variety X_λ.

    Attributes:
        top:         λ.
        members:     Every μ ≤ λ.
        cover_edges: For each member, the members it covers.
        levels:      Members grouped by ℓ^S, each level sorted.
    """

    top: CorootElement
    members: FrozenSet[CorootElement]
    cover_edges: Dict[CorootElement, FrozenSet[CorootElement]] = field(repr=False)
    levels: Dict[int, Tuple[CorootElement, ...]] = field(repr=False)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, mu: object) -> bool:
        return mu in self.members

    @property
    def dim(self) -> int:
        return max(self.levels)

    def level_sizes(self) -> List[int]:
        return [len(self.levels[k]) for k in range(self.dim + 1)]

    def sorted_members(self) -> List[CorootElement]:
        return [mu for k in sorted(self.levels) for mu in self.levels[k]]

    def poincare(self) -> IntPolynomial:
        return IntPolynomial(tuple(self.level_sizes()))

    def to_networkx(self) -> nx.DiGraph:
        """Cover graph with edges λ → μ for every cover λ ↓ μ."""
        graph = nx.DiGraph()
        for k, level in self.levels.items():
            for mu in level:
                graph.add_node(mu, lengthS=k)
        for mu, below in self.cover_edges.items():
            for nu in below:
                graph.add_edge(mu, nu)
        return graph


# ---------------------------------------------------------------------------
# Engine
# ---------------------------------------------------------------------------

def _lengthS_columns(values: np.ndarray) -> np.ndarray:
    """Column sums of f(m) = −m (m ≤ 0), m − 1 (m > 0)."""
    return np.where(values > 0, values - 1, -values).sum(axis=0)


class BruhatEngine:
    """
    Memoising front end for covers, order ideals and level enumeration.

    Args:
        config: Limits and cache sizes (defaults to :data:`DEFAULT_CONFIG`).
    """

    def __init__(self, config: Optional[SchubertConfig] = None) -> None:
        self.config = config or DEFAULT_CONFIG
        self.config.validate()
        self._cover_cache = lru_cache(maxsize=self.config.cache_size)(self._compute_covers)
        self._ideal_cache = lru_cache(maxsize=self.config.cache_size)(self._compute_ideal)

    def __repr__(self) -> str:
        return f"BruhatEngine(cache_size={self.config.cache_size})"

    def cache_clear(self) -> None:
        self._cover_cache.cache_clear()
        self._ideal_cache.cache_clear()

    # ------------------------------------------------------------------
    # Covers
    # ------------------------------------------------------------------

    @staticmethod
    def _compute_covers(
        type_label: str, rank: int, coords: Coords, window_scale: int
    ) -> Tuple[Coords, ...]:
        rs = build_root_system(type_label, rank)
        values = root_values(rs, coords)
        ls = int(_lengthS_columns(values[:, None])[0])
        if ls == 0:
            return ()
        P = rs.pairing_matrix
        a = np.asarray(coords, dtype=np.int64)
        bound = window_scale * (ls + rs.num_positive_roots)
        found: Set[Coords] = set()
        for b in range(rs.num_positive_roots):
            vb = int(values[b])
            # λ' = λ + dβ∨ with d = k − β(λ) and |2k − β(λ)| ≤ bound.
            lo = -((bound + vb) // 2)
            hi = (bound - vb) // 2
            ds = np.arange(lo, hi + 1, dtype=np.int64)
            ds = ds[ds != 0]
            if ds.size == 0:
                continue
            column = P[:, b]
            new_values = values[:, None] + column[:, None] * ds[None, :]
            hits = ds[_lengthS_columns(new_values) == ls - 1]
            for d in hits:
                found.add(tuple(int(x) for x in a + P[:rank, b] * d))
        return tuple(sorted(found))

    def cover_coords(
        self, rs: RootSystem, coords: Coords, window_scale: Optional[int] = None
    ) -> Tuple[Coords, ...]:
        scale = self.config.window_scale if window_scale is None else window_scale
        return self._cover_cache(rs.type_label, rs.rank, tuple(coords), scale)

    def covers(
        self, lam: CorootElement, window_scale: Optional[int] = None
    ) -> FrozenSet[CorootElement]:
        """
        Every μ with λ ↓ μ a Bruhat cover.

        Args:
            lam:          λ.
            window_scale: Override for :attr:`SchubertConfig.window_scale`.
        """
        rs = lam.rs
        return frozenset(
            CorootElement._trusted(rs, c) for c in self.cover_coords(rs, lam.coords, window_scale)
        )

    # ------------------------------------------------------------------
    # Order ideals
    # ------------------------------------------------------------------

    def _compute_ideal(self, type_label: str, rank: int, coords: Coords) -> OrderIdeal:
        rs = build_root_system(type_label, rank)
        cap = self.config.ideal_member_cap
        top_ls = lengthS_of(rs, coords)
        edges: Dict[Coords, Tuple[Coords, ...]] = {}
        levels: Dict[int, Set[Coords]] = {top_ls: {coords}}
        count = 1
        for k in range(top_ls, 0, -1):
            below: Set[Coords] = set()
            for c in levels[k]:
                cov = self.cover_coords(rs, c)
                edges[c] = cov
                below.update(cov)
            count += len(below)
            if count > cap:
                raise ResourceLimit(
                    f"Order ideal of {coords} in {rs.name} exceeds {cap} members"
                )
            levels[k - 1] = below
        for c in levels[0]:
            edges[c] = ()

        wrap: Dict[Coords, CorootElement] = {}
        for level in levels.values():
            for c in level:
                wrap[c] = CorootElement._trusted(rs, c)
        members = frozenset(wrap.values())
        cover_edges = {
            wrap[c]: frozenset(wrap[x] for x in cov) for c, cov in edges.items()
        }
        sorted_levels = {
            k: tuple(wrap[c] for c in sorted(level)) for k, level in levels.items()
        }
        logger.debug("Ideal of %s in %s: %d members", coords, rs.name, len(members))
        return OrderIdeal(
            top=wrap[coords],
            members=members,
            cover_edges=cover_edges,
            levels=sorted_levels,
        )

    def order_ideal(self, lam: CorootElement) -> OrderIdeal:
        """
        The interval [0, λ] with its cover edges.

        Raises:
            ResourceLimit: Past ``config.ideal_member_cap`` members.
        """
        return self._ideal_cache(lam.rs.type_label, lam.rs.rank, lam.coords)

    def poincare_polynomial(self, lam: CorootElement) -> IntPolynomial:
        """|X_λ|(t) = Σ_{μ ≤ λ} t^{ℓ^S(μ)}."""
        return self.order_ideal(lam).poincare()

    def is_palindromic(self, lam: CorootElement) -> bool:
        return self.poincare_polynomial(lam).is_palindromic()

    # ------------------------------------------------------------------
    # Comparisons
    # ------------------------------------------------------------------

    def bruhat_leq(self, mu: CorootElement, lam: CorootElement) -> bool:
        """True iff μ ∈ [0, λ]."""
        if mu.rs.key != lam.rs.key:
            raise SystemMismatch(f"{mu} and {lam} belong to different root systems")
        rs = lam.rs
        ls_mu = lengthS_of(rs, mu.coords)
        ls_lam = lengthS_of(rs, lam.coords)
        if ls_mu > ls_lam:
            return False
        if ls_mu == ls_lam:
            return mu.coords == lam.coords
        return mu in self.order_ideal(lam)

    def subword_leq(self, mu: CorootElement, lam: CorootElement) -> bool:
        """
        Compare by the lifting property on reduced words.

        Strip the first descent s of λ; if s is also a descent of μ recurse on
        (sμ, sλ), otherwise on (μ, sλ).  Shares nothing with the cover sweep.

        Raises:
            OracleCapExceeded: If ℓ^S(λ) exceeds ``config.oracle_cap``.
        """
        if mu.rs.key != lam.rs.key:
            raise SystemMismatch(f"{mu} and {lam} belong to different root systems")
        rs = lam.rs
        if lengthS_of(rs, lam.coords) > self.config.oracle_cap:
            raise OracleCapExceeded(
                f"ℓ^S({lam}) exceeds the oracle cap {self.config.oracle_cap}"
            )
        m, l = mu.coords, lam.coords
        while True:
            if not any(l):
                return not any(m)
            s = next(s for s in range(rs.rank + 1) if label_of(rs, l, s) < 0)
            if label_of(rs, m, s) < 0:
                m = fire_coords(rs, m, s)
            l = fire_coords(rs, l, s)

    # ------------------------------------------------------------------
    # Level enumeration
    # ------------------------------------------------------------------

    def enumerate_levels(self, rs: RootSystem, max_len: int) -> Dict[int, List[CorootElement]]:
        """
        All λ with ℓ^S(λ) ≤ *max_len*, grouped by ℓ^S.

        Built by firing every ascent from 0, level by level.

        Raises:
            ValueError:    If *max_len* is negative.
            ResourceLimit: Past ``config.level_member_cap`` elements in total.
        """
        if max_len < 0:
            raise ValueError(f"max_len must be >= 0, got {max_len}")
        cap = self.config.level_member_cap
        current: Set[Coords] = {(0,) * rs.rank}
        levels: Dict[int, List[CorootElement]] = {}
        total = 0
        for k in range(max_len + 1):
            total += len(current)
            if total > cap:
                raise ResourceLimit(
                    f"Enumerating {rs.name} to length {max_len} exceeds {cap} elements"
                )
            levels[k] = [CorootElement._trusted(rs, c) for c in sorted(current)]
            logger.debug("%s level %d: %d elements", rs.name, k, len(current))
            if k == max_len:
                break
            nxt: Set[Coords] = set()
            for c in current:
                for s in range(rs.rank + 1):
                    if label_of(rs, c, s) > 0:
                        nxt.add(fire_coords(rs, c, s))
            current = nxt
        return levels

    def forks_too_soon(self, lam: CorootElement) -> bool:
        """
        True iff 0 ≤ m − k < k_G, with m = ℓ^S(λ) and k maximal with a_k > 1.

        False when every coefficient is at most 1.
        """
        coeffs = self.poincare_polynomial(lam).coeffs
        branching = [k for k, c in enumerate(coeffs) if c > 1]
        if not branching:
            return False
        stats = fork_stats(lam.rs)
        if stats.k_G is Unbounded.INFINITE:
            return False
        m = len(coeffs) - 1
        return 0 <= m - branching[-1] < stats.k_G


# ---------------------------------------------------------------------------
# Module-level API on the default engine
# ---------------------------------------------------------------------------

_DEFAULT_ENGINE: Optional[BruhatEngine] = None


def default_engine() -> BruhatEngine:
    global _DEFAULT_ENGINE
    if _DEFAULT_ENGINE is None:
        _DEFAULT_ENGINE = BruhatEngine(DEFAULT_CONFIG)
    return _DEFAULT_ENGINE


def covers(lam: CorootElement) -> FrozenSet[CorootElement]:
    return default_engine().covers(lam)


def order_ideal(lam: CorootElement) -> OrderIdeal:
    return default_engine().order_ideal(lam)


def poincare_polynomial(lam: CorootElement) -> IntPolynomial:
    return default_engine().poincare_polynomial(lam)


def is_palindromic(lam: CorootElement) -> bool:
    return default_engine().is_palindromic(lam)


def bruhat_leq(mu: CorootElement, lam: CorootElement) -> bool:
    return default_engine().bruhat_leq(mu, lam)


def subword_leq(mu: CorootElement, lam: CorootElement) -> bool:
    return default_engine().subword_leq(mu, lam)


def enumerate_levels(rs: RootSystem, max_len: int) -> Dict[int, List[CorootElement]]:
    return default_engine().enumerate_levels(rs, max_len)


def forks_too_soon(lam: CorootElement) -> bool:
    return default_engine().forks_too_soon(lam)


def sorted_elements(items: Iterable[CorootElement]) -> List[CorootElement]:
    """Sort by (ℓ^S, coordinates)."""
    return sorted(items, key=sort_key)
