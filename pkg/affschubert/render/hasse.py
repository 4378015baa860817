"""
render/hasse.py
---------------
Hasse diagrams of the Bruhat order on Q∨ up to a given ℓ^S.

The cover graph is built as a ``networkx.DiGraph`` (edges point from λ down
to each element it covers) and emitted as DOT, one ``rank=same`` group per
level.  Non-trivial palindromic classes are drawn as circles and closed
parabolic orbits get a second periphery.
"""

from __future__ import annotations

import logging
from typing import List, Optional

import networkx as nx

from affschubert.lie.rootsys import RootSystem
from affschubert.order.bruhat import BruhatEngine, default_engine
from affschubert.schubert.cpo import is_cpo

logger = logging.getLogger(__name__)


def _node_id(coords) -> str:
    return '"(' + ",".join(str(c) for c in coords) + ')"'


def hasse_graph(
    rs: RootSystem, max_len: int, engine: Optional[BruhatEngine] = None
) -> nx.DiGraph:
    """
    Cover graph of every λ with ℓ^S(λ) ≤ *max_len*.

    Node attributes: ``lengthS``, ``palindromic`` (non-trivial only) and ``cpo``.
    """
    engine = engine or default_engine()
    graph = nx.DiGraph(name=rs.name)
    levels = engine.enumerate_levels(rs, max_len)
    for k, level in levels.items():
        for lam in level:
            graph.add_node(
                lam,
                lengthS=k,
                palindromic=(not lam.is_zero()) and engine.is_palindromic(lam),
                cpo=(not lam.is_zero()) and is_cpo(lam),
            )
    for k, level in levels.items():
        for lam in level:
            for mu in engine.covers(lam):
                graph.add_edge(lam, mu)
    logger.debug("Hasse graph of %s to length %d: %d nodes", rs.name, max_len, len(graph))
    return graph


def to_dot(graph: nx.DiGraph) -> str:
    """
    Render a cover graph as DOT.

    Output order is fixed: levels ascending, nodes by coordinates, edges by
    (upper, lower) coordinates.
    """
    by_level = {}
    for lam, data in graph.nodes(data=True):
        by_level.setdefault(data["lengthS"], []).append(lam)

    lines: List[str] = [f'digraph "{graph.graph.get("name", "hasse")}" {{']
    lines.append("  rankdir=BT;")
    lines.append("  node [shape=plaintext];")
    for k in sorted(by_level):
        members = sorted(by_level[k], key=lambda lam: lam.coords)
        ids = "; ".join(_node_id(lam.coords) for lam in members)
        lines.append(f"  {{ rank=same; {ids}; }}")
        for lam in members:
            data = graph.nodes[lam]
            attrs = []
            if data["palindromic"]:
                attrs.append("shape=circle")
            if data["cpo"]:
                attrs.append("peripheries=2")
            if attrs:
                lines.append(f"  {_node_id(lam.coords)} [{', '.join(attrs)}];")
    edges = sorted(graph.edges(), key=lambda e: (e[0].coords, e[1].coords))
    for upper, lower in edges:
        lines.append(f"  {_node_id(lower.coords)} -> {_node_id(upper.coords)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def hasse_dot(rs: RootSystem, max_len: int, engine: Optional[BruhatEngine] = None) -> str:
    """DOT text for :func:`hasse_graph`."""
    return to_dot(hasse_graph(rs, max_len, engine))
