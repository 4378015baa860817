"""
schubert/cpo.py
---------------
Closed parabolic orbits.

Each proper connected subgraph I of the affine diagram with s₀ ∈ I gives a
closed orbit Y_I whose top cell λ_I is the longest element reachable from 0
by firing nodes of I only.  dim Y_I = |A_I| with
A_I = {α > 0 : m_s(α) = m_s(α₀) for every s ∈ N(I)}, N(I) being the nodes
adjacent to I, and the positive nodes of λ_I are exactly N(I).
"""

from __future__ import annotations

import itertools
import json
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Dict, FrozenSet, List, Optional, Tuple

import networkx as nx

from affschubert.lie.rootsys import RootSystem, build_root_system
from affschubert.lie.weyl import Coords, CorootElement, fire_coords, label_of, lengthS_of
from affschubert.order.bruhat import BruhatEngine, default_engine
from affschubert.schubert.chains import is_chain_coords

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CpoDescriptor:
    """
    One closed parabolic orbit Y_I.

    Attributes:
        nodes:      I (sorted; empty for the trivial orbit λ = 0).
        neighbors:  N(I) ⊆ S.
        dim:        ℓ^S(λ_I).
        a_size:     |A_I|.
        top:        λ_I.
        projective: True when |Y_I|(t) = 1 + t + … + t^dim.
    """

    nodes: Tuple[int, ...]
    neighbors: Tuple[int, ...]
    dim: int
    a_size: int
    top: CorootElement
    projective: bool

    @property
    def trivial(self) -> bool:
        return not self.nodes

    def to_dict(self) -> Dict[str, Any]:
        return {
            "I": [f"s{s}" for s in self.nodes],
            "neighbors": [f"s{s}" for s in self.neighbors],
            "dim": self.dim,
            "a_size": self.a_size,
            "lambda": list(self.top.coords),
            "projective": self.projective,
        }

    def to_json(self, indent: int = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)


# ---------------------------------------------------------------------------
# Helpers
# ---------------------------------------------------------------------------

def cpo_subgraphs(rs: RootSystem) -> List[FrozenSet[int]]:
    """Connected node sets I ∋ s₀ of the affine diagram with I ≠ S̃."""
    graph = rs.affine_graph
    others = list(range(1, rs.rank + 1))
    out = []
    for size in range(0, rs.rank):
        for extra in itertools.combinations(others, size):
            subset = frozenset((0,) + extra)
            if nx.is_connected(graph.subgraph(subset)):
                out.append(subset)
    return out


def boundary(rs: RootSystem, nodes: FrozenSet[int]) -> Tuple[int, ...]:
    """N(I): nodes outside I adjacent to some node of I."""
    graph = rs.affine_graph
    return tuple(sorted({v for u in nodes for v in graph.neighbors(u)} - set(nodes)))


def a_set_size(rs: RootSystem, neighbors: Tuple[int, ...]) -> int:
    """|A_I| for the given N(I)."""
    marks = rs.marks
    return sum(
        1
        for root in rs.positive_roots
        if all(root.coeffs[s - 1] == marks[s - 1] for s in neighbors)
    )


def top_of(rs: RootSystem, nodes: FrozenSet[int]) -> Coords:
    """λ_I: fire ascents inside I, starting from 0, until none remain."""
    coords: Coords = (0,) * rs.rank
    order = sorted(nodes)
    while True:
        ups = [s for s in order if label_of(rs, coords, s) > 0]
        if not ups:
            return coords
        coords = fire_coords(rs, coords, ups[0])


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------

def enumerate_cpos(
    rs: RootSystem, engine: Optional[BruhatEngine] = None
) -> List[CpoDescriptor]:
    """
    Every closed parabolic orbit, the trivial one (λ = 0) first.

    Raises:
        RuntimeError: If some ℓ^S(λ_I) differs from |A_I|.
    """
    engine = engine or default_engine()
    zero = CorootElement.zero(rs)
    out = [
        CpoDescriptor(nodes=(), neighbors=(), dim=0, a_size=0, top=zero, projective=True)
    ]
    for subset in cpo_subgraphs(rs):
        coords = top_of(rs, subset)
        neighbors = boundary(rs, subset)
        dim = lengthS_of(rs, coords)
        a_size = a_set_size(rs, neighbors)
        if dim != a_size:
            raise RuntimeError(
                f"{rs.name} orbit {sorted(subset)}: dim {dim} but |A_I| = {a_size}"
            )
        top = CorootElement._trusted(rs, coords)
        out.append(
            CpoDescriptor(
                nodes=tuple(sorted(subset)),
                neighbors=neighbors,
                dim=dim,
                a_size=a_size,
                top=top,
                projective=is_chain_coords(engine, rs, coords),
            )
        )
    logger.debug("%s: %d closed parabolic orbits", rs.name, len(out) - 1)
    return out


@lru_cache(maxsize=None)
def _cpo_tops(type_label: str, rank: int) -> FrozenSet[Coords]:
    rs = build_root_system(type_label, rank)
    tops = {(0,) * rank}
    tops.update(top_of(rs, subset) for subset in cpo_subgraphs(rs))
    return frozenset(tops)


def is_cpo(lam: CorootElement) -> bool:
    """True iff λ is 0 or the top λ_I of some closed parabolic orbit."""
    return lam.coords in _cpo_tops(lam.rs.type_label, lam.rs.rank)
