"""
lie/moves.py
------------
Reflection moves on the coroot lattice.

For a positive root β the reflection s_β splits Φ⁺ ∖ {β} into β-null roots,
β-positive pairs (α, α′ = α + kβ) and β-negative pairs (α + α′ = kβ).  How
λ evaluates on those pairs decides whether a linear move λ → s_βλ or an
affine move λ → r_βλ changes ℓ^S by exactly one, i.e. is a Bruhat cover.

The named moves (LinearABC, GraphSplit, AffineA, AffineBC) are the
constructions used to exhibit a cover below λ directly from its labelled
diagram.  Every move returned by :func:`detect_named_moves` has been checked
with :func:`linear_descent` or :func:`affine_descent`.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Dict, FrozenSet, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from affschubert.core.errors import NotARoot
from affschubert.lie.rootsys import Root, RootSystem, build_root_system
from affschubert.lie.weyl import CorootElement, reflect, root_values

logger = logging.getLogger(__name__)

LINEAR = "linear"
AFFINE = "affine"

# Reflections each named construction may use.
_REFLECTIONS: Dict[str, Tuple[str, ...]] = {
    "LinearABC": (LINEAR,),
    "GraphSplit": (AFFINE,),
    "AffineA": (LINEAR, AFFINE),
    "AffineBC": (LINEAR, AFFINE),
}


# ---------------------------------------------------------------------------
# Pair partition
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PairPartition:
    """
    Partition of Φ⁺ relative to a positive root β.

    Attributes:
        beta:           The root β.
        null_roots:     Roots with α(β∨) = 0.
        positive_pairs: (α, α′) with α(β∨) = −k < 0 and α′ = α + kβ.
        negative_pairs: (α, α′) with α + α′ = kβ, k = α(β∨); for k = 2, 3
                        α is chosen so that β − α is a positive root.
    """

    beta: Root
    null_roots: FrozenSet[Root]
    positive_pairs: Tuple[Tuple[Root, Root], ...]
    negative_pairs: Tuple[Tuple[Root, Root], ...]
    # (index α, index α′, k) for the evaluation kernels
    positive_index: Tuple[Tuple[int, int, int], ...] = ()
    negative_index: Tuple[Tuple[int, int, int], ...] = ()

    def long_negative_pairs(self) -> Tuple[Tuple[Root, Root], ...]:
        """Negative pairs with k >= 2 (both members long, β short)."""
        return tuple(
            pair for pair, (_, _, k) in zip(self.negative_pairs, self.negative_index) if k >= 2
        )


@lru_cache(maxsize=None)
def _partition(type_label: str, rank: int, beta_index: int) -> PairPartition:
    rs = build_root_system(type_label, rank)
    roots = rs.positive_roots
    beta = roots[beta_index]
    beta_vec = np.array(beta.coeffs, dtype=np.int64)
    P = rs.pairing_matrix

    nulls: List[Root] = []
    positive: List[Tuple[int, int, int]] = []
    negative: List[Tuple[int, int, int]] = []
    placed = {beta_index}

    for a, alpha in enumerate(roots):
        if a == beta_index:
            continue
        p = int(P[a, beta_index])
        if p == 0:
            nulls.append(alpha)
            placed.add(a)
            continue
        if a in placed:
            continue
        image = np.array(alpha.coeffs, dtype=np.int64) - p * beta_vec
        if p < 0:
            partner = rs.root_index[tuple(int(x) for x in image)]
            positive.append((a, partner, -p))
        elif int(image.min()) >= 0:
            # α is the upper member α′ of a positive pair, found from its partner.
            continue
        else:
            partner = rs.root_index[tuple(int(-x) for x in image)]
            first, second = a, partner
            if p >= 2:
                diff = tuple(int(x) for x in beta_vec - np.array(roots[a].coeffs))
                if diff not in rs.root_index:
                    first, second = partner, a
            negative.append((first, second, p))
            placed.add(partner)
        placed.add(a)

    # Upper members of positive pairs are placed through their partners.
    for a, partner, _ in positive:
        placed.add(a)
        placed.add(partner)
    if len(placed) != len(roots):
        raise RuntimeError(f"Pair partition of {beta} in {rs.name} is incomplete")

    return PairPartition(
        beta=beta,
        null_roots=frozenset(nulls),
        positive_pairs=tuple((roots[a], roots[b]) for a, b, _ in positive),
        negative_pairs=tuple((roots[a], roots[b]) for a, b, _ in negative),
        positive_index=tuple(positive),
        negative_index=tuple(negative),
    )


def pair_partition(rs: RootSystem, beta: Root) -> PairPartition:
    """
    Split Φ⁺ into β, β-null roots, β-positive pairs and β-negative pairs.

    Raises:
        NotARoot: If *beta* is not a positive root of *rs*.
    """
    return _partition(rs.type_label, rs.rank, rs.index_of(beta))


# ---------------------------------------------------------------------------
# Descent and ascent tests
# ---------------------------------------------------------------------------

def _values_and_partition(lam: CorootElement, beta: Root) -> Tuple[np.ndarray, int, PairPartition]:
    rs = lam.rs
    partition = pair_partition(rs, beta)
    values = root_values(rs, lam.coords)
    return values, int(values[rs.index_of(beta)]), partition


def linear_descent(lam: CorootElement, beta: Root) -> bool:
    """
    True iff λ ↓ s_βλ is a Bruhat cover.

    Holds exactly when β(λ) < 0 and every β-negative pair takes values of
    strictly opposite sign on λ.
    """
    values, b, partition = _values_and_partition(lam, beta)
    if b >= 0:
        return False
    for a, a2, _ in partition.negative_index:
        if int(values[a]) * int(values[a2]) >= 0:
            return False
    return True


def affine_descent(lam: CorootElement, beta: Root) -> bool:
    """
    True iff λ ↓ r_βλ is a Bruhat cover.

    Requires 1 − β(λ) < 0 together with

    * the positive pair condition: α(λ) > 0 or α′(λ) ≤ 0 for every β-positive pair;
    * the negative pair condition: β is long, or α(λ) ≤ 0 or α′(λ) ≤ 0 for
      every long β-negative pair.
    """
    values, b, partition = _values_and_partition(lam, beta)
    if 1 - b >= 0:
        return False
    for a, a2, _ in partition.positive_index:
        if not (values[a] > 0 or values[a2] <= 0):
            return False
    if not beta.is_long:
        for a, a2, k in partition.negative_index:
            if k >= 2 and not (values[a] <= 0 or values[a2] <= 0):
                return False
    return True


def linear_ascent(lam: CorootElement, beta: Root) -> bool:
    """True iff s_βλ covers λ (the descent test applied to s_βλ)."""
    values, b, _ = _values_and_partition(lam, beta)
    if b <= 0:
        return False
    return linear_descent(reflect(lam, beta, 0), beta)


def affine_ascent(lam: CorootElement, beta: Root) -> bool:
    """True iff r_βλ covers λ (the descent test applied to r_βλ)."""
    values, b, _ = _values_and_partition(lam, beta)
    if 1 - b <= 0:
        return False
    return affine_descent(reflect(lam, beta, 1), beta)


# ---------------------------------------------------------------------------
# Named moves
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class NamedMove:
    """
    A verified cover λ ↓ μ produced by one of the diagram constructions.

    Attributes:
        kind:       ``LinearABC``, ``GraphSplit``, ``AffineA`` or ``AffineBC``.
        variant:    ``a``/``b``/``c`` for LinearABC, otherwise ``None``.
        beta:       The witnessing root.
        subgraph:   The linking subgraph I (sorted node indices).
        reflection: ``linear`` (s_β) or ``affine`` (r_β).
        target:     μ.
    """

    kind: str
    variant: Optional[str]
    beta: Root
    subgraph: Tuple[int, ...]
    reflection: str
    target: CorootElement

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": self.kind,
            "variant": self.variant,
            "beta": list(self.beta.coeffs),
            "subgraph": [f"s{s}" for s in self.subgraph],
            "reflection": self.reflection,
            "target": list(self.target.coords),
        }


@lru_cache(maxsize=None)
def connected_finite_subsets(type_label: str, rank: int) -> Tuple[FrozenSet[int], ...]:
    """Every nonempty proper connected node subset of the finite Dynkin diagram."""
    rs = build_root_system(type_label, rank)
    graph = rs.finite_graph()
    nodes = list(range(1, rank + 1))
    out = []
    for size in range(1, rank):
        for subset in itertools.combinations(nodes, size):
            if nx.is_connected(graph.subgraph(subset)):
                out.append(frozenset(subset))
    return tuple(out)


def _path_kind(rs: RootSystem, path: Sequence[int]) -> str:
    """``A`` for all single edges, ``BC`` with a double edge, ``G`` with a triple edge."""
    kinds = set()
    for u, v in zip(path, path[1:]):
        edge = rs.affine_graph.edges[u, v]
        if edge["a1_double"]:
            kinds.add(2)
        else:
            kinds.add(edge["multiplicity"])
    if 3 in kinds:
        return "G"
    if 2 in kinds:
        return "BC"
    return "A"


def _indicator(rs: RootSystem, nodes: Sequence[int]) -> Tuple[int, ...]:
    chosen = set(nodes)
    return tuple(1 if i + 1 in chosen else 0 for i in range(rs.rank))


def _minuscule_ends(rs: RootSystem, path: Sequence[int]) -> FrozenSet[int]:
    """Endpoints of a finite path whose coefficient in its highest root is 1."""
    top = rs.highest_root_of(path)
    return frozenset(s for s in (path[0], path[-1]) if top.coeffs[s - 1] == 1)


def _twice_root(rs: RootSystem, path: Sequence[int], node: int) -> Optional[Root]:
    """Smallest root supported on *path* with coefficient 2 at *node*."""
    candidates = [r for r in rs.roots_supported_in(path) if r.coeffs[node - 1] == 2]
    if not candidates:
        return None
    return min(candidates, key=lambda r: (r.height, r.coeffs))


def _interior_zero(lam: CorootElement, path: Sequence[int]) -> bool:
    return all(lam.label(s) == 0 for s in path[1:-1])


def detect_named_moves(lam: CorootElement) -> List[NamedMove]:
    """
    Return every applicable named move below λ, each verified as a cover.

    Args:
        lam: The element λ.

    Returns:
        Moves sorted by (kind, variant, subgraph, β, reflection).
    """
    rs = lam.rs
    found: Dict[Tuple[Any, ...], NamedMove] = {}

    def _offer(
        kind: str, variant: Optional[str], beta: Optional[Root], path: Sequence[int]
    ) -> None:
        if beta is None:
            return
        subgraph = tuple(sorted(set(path)))
        for reflection, test, k in ((LINEAR, linear_descent, 0), (AFFINE, affine_descent, 1)):
            if reflection not in _REFLECTIONS[kind]:
                continue
            if test(lam, beta):
                key = (kind, variant or "", subgraph, beta.coeffs, reflection)
                found[key] = NamedMove(
                    kind=kind,
                    variant=variant,
                    beta=beta,
                    subgraph=subgraph,
                    reflection=reflection,
                    target=reflect(lam, beta, k),
                )

    finite = rs.finite_graph()
    labels = lam.labels()
    negatives = [s for s in range(1, rs.rank + 1) if labels[s] < 0]
    positives = [t for t in range(1, rs.rank + 1) if labels[t] > 0]

    # LinearABC: negative s and positive t linked through zero nodes.
    for s in negatives:
        for t in positives:
            path = nx.shortest_path(finite, s, t)
            if not _interior_zero(lam, path):
                continue
            kind = _path_kind(rs, path)
            if kind == "G":
                continue
            sigma = sum(labels[v] for v in path)
            beta_sum = rs.find_root(_indicator(rs, path))
            if kind == "A":
                if sigma < 0:
                    _offer("LinearABC", "a", beta_sum, path)
                continue
            ends = _minuscule_ends(rs, path)
            a_s, a_t = labels[s], labels[t]
            if t in ends and sigma < 0:
                _offer("LinearABC", "a", beta_sum, path)
            if t in ends and sigma > 0 and 2 * a_s + a_t < 0:
                _offer("LinearABC", "b", _twice_root(rs, path, s), path)
            if s in ends and sigma < 0 and a_s + 2 * a_t != 0:
                _offer("LinearABC", "c", beta_sum, path)
                _offer("LinearABC", "c", _twice_root(rs, path, t), path)

    # GraphSplit: highest root of a proper connected subgraph with α_I(λ) >= 2.
    for subset in connected_finite_subsets(rs.type_label, rs.rank):
        top = rs.highest_root_of(subset)
        value = sum(m * a for m, a in zip(top.coeffs, lam.coords))
        if value >= 2:
            _offer("GraphSplit", None, top, sorted(subset))

    # AffineA / AffineBC: s₀ linked to t through zero nodes.
    s0 = labels[0]
    graph = rs.affine_graph
    for t in range(1, rs.rank + 1):
        a_t = labels[t]
        for path in nx.all_simple_paths(graph, 0, t):
            if len(path) == rs.rank + 1 or not _interior_zero(lam, path):
                continue
            kind = _path_kind(rs, path)
            rest = [v for v in path if v != 0]
            upper = tuple(m - c for m, c in zip(rs.marks, _indicator(rs, rest)))
            beta_upper = rs.find_root(upper)
            if kind == "A" and not graph.edges[path[0], path[1]]["a1_double"]:
                if s0 * a_t < 0 and s0 + a_t < 0:
                    _offer("AffineA", None, beta_upper, path)
            elif kind == "BC" and s0 < 0 < a_t:
                if s0 + a_t < 0 and s0 + 2 * a_t != 0:
                    _offer("AffineBC", None, beta_upper, path)
                    _offer("AffineBC", None, rs.highest_root_of(rest), path)
                    if rs.type_label == "F":
                        _offer("AffineBC", None, rs.find_root((1, 2, 2, 2)), path)

    moves = sorted(
        found.values(),
        key=lambda m: (m.kind, m.variant or "", m.subgraph, m.beta.coeffs, m.reflection),
    )
    logger.debug("%s: %d named moves", lam, len(moves))
    return moves
