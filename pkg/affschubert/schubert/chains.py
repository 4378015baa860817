"""
schubert/chains.py
------------------
Chains: Schubert varieties whose Poincaré polynomial is 1 + t + … + t^d.

A chain has a unique reduced word, and its firing-up order is an admissible
path in the affine diagram starting at s₀: consecutive nodes are adjacent,
and the path turns back only along a multiple edge (at most once in a row on
a double edge, three times on a triple edge, freely in A₁).  Chains are
generated by walking admissible paths and keeping each step whose new top
covers exactly the previous one.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

from affschubert.lie.rootsys import RootSystem
from affschubert.lie.weyl import (
    Coords,
    CorootElement,
    ReducedWord,
    fire_coords,
    label_of,
    word_for,
)
from affschubert.order.bruhat import BruhatEngine, default_engine
from affschubert.schubert.chevalley import cup_products, cup_sequence

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# Descriptor
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ChainDescriptor:
    """
    A chain X_λ with its rigid word and cup sequence.

    Attributes:
        word:         The unique reduced word of λ.
        top:          λ.
        cup_sequence: (a₁, …, a_m) with y₁·y_{k−1} = a_k y_k.
        maximal:      No ascent of λ is again a chain.
    """

    word: ReducedWord
    top: CorootElement
    cup_sequence: Tuple[int, ...]
    maximal: bool

    @property
    def dim(self) -> int:
        return len(self.word)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "lambda": list(self.top.coords),
            "word": str(self.word),
            "dim": self.dim,
            "cup_sequence": list(self.cup_sequence),
            "pd": chain_pd(self),
            "maximal": self.maximal,
        }

    def to_json(self, indent: int = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)


# ---------------------------------------------------------------------------
# Admissible paths
# ---------------------------------------------------------------------------

def _reversal_limit(rs: RootSystem, u: int, v: int) -> Optional[int]:
    """Consecutive reversals allowed along edge u–v; ``None`` means unbounded."""
    edge = rs.affine_graph.edges[u, v]
    if edge["a1_double"]:
        return None
    return {1: 0, 2: 1, 3: 3}[int(edge["multiplicity"])]


def is_admissible_path(rs: RootSystem, word: ReducedWord) -> bool:
    """
    True iff the firing-up order of *word* is an admissible path from s₀.
    """
    order = word.firing_order()
    if not order:
        return True
    if order[0] != 0:
        return False
    graph = rs.affine_graph
    run = 0
    for i in range(1, len(order)):
        u, v = order[i - 1], order[i]
        if not graph.has_edge(u, v):
            return False
        if i >= 2 and order[i - 2] == v:
            run += 1
            limit = _reversal_limit(rs, u, v)
            if limit is not None and run > limit:
                return False
        else:
            run = 0
    return True


# ---------------------------------------------------------------------------
# Predicates
# ---------------------------------------------------------------------------

def is_chain(lam: CorootElement, engine: Optional[BruhatEngine] = None) -> bool:
    """
    True iff every coefficient of |X_λ|(t) equals 1.

    Walks down from λ while each element covers exactly one other, which holds
    all the way to 0 exactly for chains.
    """
    engine = engine or default_engine()
    return is_chain_coords(engine, lam.rs, lam.coords)


def is_chain_coords(engine: BruhatEngine, rs: RootSystem, coords: Coords) -> bool:
    while any(coords):
        below = engine.cover_coords(rs, coords)
        if len(below) != 1:
            return False
        coords = below[0]
    return True


def chain_pd(chain: ChainDescriptor) -> bool:
    """Integral Poincaré duality of a chain: a_k = a_{m−k+1} for all k."""
    seq = chain.cup_sequence
    return seq == seq[::-1]


def chain_pd_by_products(chain: ChainDescriptor) -> bool:
    """Integral Poincaré duality through products: c_k c_{m−k} = c_m for all k."""
    c = cup_products(chain.cup_sequence)
    m = len(chain.cup_sequence)
    return all(c[k] * c[m - k] == c[m] for k in range(m + 1))


def pd_necessary(lam: CorootElement) -> bool:
    """
    Necessary condition for integral Poincaré duality.

    λ = 0, or λ has a single negative node s, s is long, and its label is −1.
    """
    labels = lam.labels()
    negative = [s for s, v in enumerate(labels) if v < 0]
    if not negative:
        return lam.is_zero()
    if len(negative) != 1:
        return False
    s = negative[0]
    return lam.rs.node_length_class[s] == "long" and labels[s] == -1


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------

def _extends_chain(
    engine: BruhatEngine, rs: RootSystem, below: Coords, above: Coords
) -> bool:
    # Below a chain every ideal is a chain, so `above` is one iff it covers only `below`.
    return engine.cover_coords(rs, above) == (below,)


def _chain_steps(
    engine: BruhatEngine, rs: RootSystem, coords: Coords
) -> List[Tuple[int, Coords]]:
    out = []
    for s in range(rs.rank + 1):
        if label_of(rs, coords, s) <= 0:
            continue
        nxt = fire_coords(rs, coords, s)
        if _extends_chain(engine, rs, coords, nxt):
            out.append((s, nxt))
    return out


def enumerate_chains(
    rs: RootSystem, max_len: int, engine: Optional[BruhatEngine] = None
) -> List[ChainDescriptor]:
    """
    All non-trivial chains of dimension at most *max_len*.

    Args:
        rs:      The root system.
        max_len: Largest dimension to generate (≥ 1).
        engine:  Bruhat engine for the cover checks.

    Returns:
        Descriptors sorted by (dim, coordinates).

    Raises:
        ValueError: If *max_len* < 1.
    """
    if max_len < 1:
        raise ValueError(f"max_len must be >= 1, got {max_len}")
    engine = engine or default_engine()
    zero: Coords = (0,) * rs.rank
    out: List[ChainDescriptor] = []
    stack: List[Tuple[Coords, Tuple[int, ...]]] = [(fire_coords(rs, zero, 0), (0,))]
    while stack:
        coords, order = stack.pop()
        steps = _chain_steps(engine, rs, coords)
        word = ReducedWord(tuple(reversed(order)))
        top = CorootElement._trusted(rs, coords)
        out.append(
            ChainDescriptor(
                word=word,
                top=top,
                cup_sequence=tuple(cup_sequence(top)),
                maximal=not steps,
            )
        )
        if len(order) < max_len:
            for s, nxt in steps:
                stack.append((nxt, order + (s,)))
    out.sort(key=lambda c: (c.dim, c.top.coords))
    logger.debug("%s: %d chains up to dimension %d", rs.name, len(out), max_len)
    return out


def chain_descriptor(
    lam: CorootElement, engine: Optional[BruhatEngine] = None
) -> ChainDescriptor:
    """
    Describe a single chain.

    Raises:
        ValueError: If λ is not a chain.
    """
    engine = engine or default_engine()
    if not is_chain(lam, engine):
        raise ValueError(f"{lam} is not a chain")
    rs = lam.rs
    steps = _chain_steps(engine, rs, lam.coords)
    return ChainDescriptor(
        word=word_for(lam),
        top=lam,
        cup_sequence=tuple(cup_sequence(lam)),
        maximal=not steps,
    )
