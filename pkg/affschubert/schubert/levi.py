"""
schubert/levi.py
----------------
Parabolic orbit decomposition of Schubert varieties.

For a subset I of the affine nodes, X_λ is a union of W̃_I-orbits, one for
each I-minimal λ (every node of I nonnegative on λ).  The orbit through an
I-minimal λ contributes

    p_λ(t) = t^{ℓ^S(λ)} · |M_λ|(t),   |M_λ|(t) = Π_I [d_i]_t / Π_{K_λ} [d_j]_t,

where K_λ ⊆ I are the zero nodes of λ and the products run over the degrees
of the finite Coxeter groups spanned by I and K_λ.  Connected components are
typed by graph isomorphism against the finite Dynkin diagrams.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Dict, FrozenSet, Iterable, List, Optional, Tuple

import networkx as nx

from affschubert.core.errors import NotIMinimal
from affschubert.lie import tables
from affschubert.lie.rootsys import RootSystem, build_root_system
from affschubert.lie.weyl import CorootElement, lengthS_of
from affschubert.order.bruhat import BruhatEngine, default_engine
from affschubert.order.polynomial import IntPolynomial, q_product

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# Subgraph typing
# ---------------------------------------------------------------------------

def _edge_match(a: Dict[str, Any], b: Dict[str, Any]) -> bool:
    return a["multiplicity"] == b["multiplicity"] and a["a1_double"] == b["a1_double"]


@lru_cache(maxsize=None)
def _component_type(
    type_label: str, rank: int, nodes: FrozenSet[int]
) -> Tuple[str, int]:
    rs = build_root_system(type_label, rank)
    sub = rs.affine_graph.subgraph(nodes)
    for label, r in tables.finite_types_of_rank(len(nodes)):
        candidate = build_root_system(label, r).finite_graph()
        if nx.is_isomorphic(sub, candidate, edge_match=_edge_match):
            return label, r
    raise ValueError(f"Subgraph {sorted(nodes)} of affine {rs.name} is not of finite type")


def subgraph_components(
    rs: RootSystem, nodes: Iterable[int]
) -> List[Tuple[Tuple[int, ...], str, int]]:
    """
    Split a node set into connected components and type each one.

    Returns:
        ``(component nodes, type label, rank)`` per component.

    Raises:
        ValueError: If some component is the whole affine diagram.
    """
    chosen = frozenset(nodes)
    if chosen == frozenset(rs.nodes):
        raise ValueError(f"The full affine diagram of {rs.name} spans an infinite group")
    out = []
    for comp in nx.connected_components(rs.affine_graph.subgraph(chosen)):
        label, r = _component_type(rs.type_label, rs.rank, frozenset(comp))
        out.append((tuple(sorted(comp)), label, r))
    return sorted(out)


def subgraph_degrees(rs: RootSystem, nodes: Iterable[int]) -> List[int]:
    """Degrees of the finite Coxeter group generated by the given nodes."""
    out: List[int] = []
    for _, label, r in subgraph_components(rs, nodes):
        out.extend(tables.degrees(label, r))
    return sorted(out)


def subgraph_poincare(rs: RootSystem, nodes: Iterable[int]) -> IntPolynomial:
    """Π [d_i]_t over the degrees of W_I."""
    return q_product(subgraph_degrees(rs, nodes))


# ---------------------------------------------------------------------------
# I-minimal elements
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LeviData:
    """
    Orbit data of an I-minimal λ.

    Attributes:
        zero_nodes: K_λ, the zero nodes of λ inside I.
        levi:       |M_λ|(t).
        orbit:      p_λ(t) = t^{ℓ^S(λ)} |M_λ|(t).
    """

    zero_nodes: Tuple[int, ...]
    levi: IntPolynomial
    orbit: IntPolynomial

    def to_dict(self) -> Dict[str, Any]:
        return {
            "K": [f"s{s}" for s in self.zero_nodes],
            "levi": self.levi.to_list(),
            "orbit": self.orbit.to_list(),
        }

    def to_json(self, indent: int = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)


def _check_nodes(rs: RootSystem, nodes: Iterable[int]) -> FrozenSet[int]:
    chosen = frozenset(nodes)
    bad = sorted(s for s in chosen if not 0 <= s <= rs.rank)
    if bad:
        raise ValueError(f"{rs.name} has no nodes {bad}")
    return chosen


def i_minimal(lam: CorootElement, nodes: Iterable[int]) -> bool:
    """True iff every node of I is nonnegative on λ (s₀ read as 1 − α₀(λ))."""
    chosen = _check_nodes(lam.rs, nodes)
    return all(lam.label(s) >= 0 for s in chosen)


def levi_data(lam: CorootElement, nodes: Iterable[int]) -> LeviData:
    """
    Return (K_λ, |M_λ|(t), p_λ(t)).

    Raises:
        NotIMinimal: If some node of I is negative on λ.
        ValueError:  If I is the whole affine diagram.
    """
    rs = lam.rs
    chosen = _check_nodes(rs, nodes)
    if not i_minimal(lam, chosen):
        raise NotIMinimal(f"{lam} is not minimal in its W̃_I orbit for I = {sorted(chosen)}")
    zero = tuple(sorted(s for s in chosen if lam.label(s) == 0))
    levi = subgraph_poincare(rs, chosen).exact_div(subgraph_poincare(rs, zero))
    orbit = levi.shift(lengthS_of(rs, lam.coords))
    return LeviData(zero_nodes=zero, levi=levi, orbit=orbit)


def orbit_decomposition(
    rs: RootSystem,
    nodes: Iterable[int],
    cutoff: int,
    engine: Optional[BruhatEngine] = None,
) -> IntPolynomial:
    """
    Σ p_λ(t) over every I-minimal λ with ℓ^S(λ) ≤ *cutoff*, truncated at *cutoff*.

    For I ∋ s₀ proper this reproduces the Bott series through *cutoff*.
    """
    engine = engine or default_engine()
    chosen = _check_nodes(rs, nodes)
    total = IntPolynomial()
    for level in engine.enumerate_levels(rs, cutoff).values():
        for lam in level:
            if i_minimal(lam, chosen):
                total = total + levi_data(lam, chosen).orbit
    return total.truncate(cutoff)
