"""
lie/rootsys.py
--------------
Finite root systems of types A–G together with their affine Dynkin diagrams.

A :class:`RootSystem` is built once per (type, rank) by :func:`build_root_system`
and shared afterwards; every field is derived from the static tables in
:mod:`affschubert.lie.tables` plus a closure of the simple roots under the simple
reflections.

Conventions
-----------
* Nodes are integers: ``0`` is the affine node s₀, ``1..n`` are s₁..s_n.
* ``cartan[i-1][j-1] = α_j(α_i∨)``.
* Roots are stored in the simple-root basis; the symmetrized form is scaled
  so that every inner product is an integer.  Pairings α(β∨) are independent
  of that scale.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from affschubert.core.errors import LengthMismatch, NotARoot
from affschubert.lie import tables

logger = logging.getLogger(__name__)

LONG = "long"
SHORT = "short"


# ---------------------------------------------------------------------------
# Root
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Root:
    """
    A root written in the simple-root basis.

    Attributes:
        coeffs:       Integer coefficients m_s(α), one per simple root.
        length_class: ``"long"`` or ``"short"``.
    """

    coeffs: Tuple[int, ...]
    length_class: str = LONG

    @property
    def height(self) -> int:
        return sum(self.coeffs)

    @property
    def is_long(self) -> bool:
        return self.length_class == LONG

    def support(self) -> FrozenSet[int]:
        """Nodes (1-based) whose simple root occurs in this root."""
        return frozenset(i + 1 for i, c in enumerate(self.coeffs) if c)

    def __str__(self) -> str:
        if all(0 <= c < 10 for c in self.coeffs):
            return "".join(str(c) for c in self.coeffs)
        return "(" + ",".join(str(c) for c in self.coeffs) + ")"


# ---------------------------------------------------------------------------
# RootSystem
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class RootSystem:
    """
    Immutable per-type tables for a finite root system and its affine diagram.

    Attributes:
        type_label:        One of ``A``–``G``.
        rank:              Number of simple roots n.
        cartan:            n×n integer matrix, ``cartan[i][j] = α_{j+1}(α_{i+1}∨)``.
        gram:              n×n integer Gram matrix of the scaled invariant form.
        positive_roots:    Φ⁺ ordered by height, then descending lexicographic
                           coefficients (so α₁,…,α_n come first).
        highest_root:      α₀.
        marks:             m_s with α₀ = Σ m_s α_s.
        exponents:         e₁ ≤ … ≤ e_n.
        degrees:           d_i = e_i + 1.
        affine_graph:      ``networkx.Graph`` on nodes 0..n.  Edges carry
                           ``multiplicity`` (1, 2, 3), ``short_end`` (node or
                           ``None``) and ``a1_double`` (affine A₁ only).
        minuscule:         Nodes with mark 1.
        node_length_class: Node -> ``"long"`` / ``"short"``; s₀ is long.
    """

    type_label: str
    rank: int
    cartan: np.ndarray
    gram: np.ndarray
    positive_roots: Tuple[Root, ...]
    highest_root: Root
    marks: Tuple[int, ...]
    exponents: Tuple[int, ...]
    degrees: Tuple[int, ...]
    affine_graph: nx.Graph
    minuscule: FrozenSet[int]
    node_length_class: Dict[int, str]
    # Derived arrays used by the enumeration core.
    root_matrix: np.ndarray = field(repr=False)
    pairing_matrix: np.ndarray = field(repr=False)
    root_index: Dict[Tuple[int, ...], int] = field(repr=False)
    alpha0_coroot: Tuple[int, ...] = field(repr=False)
    node_sq_lengths: Dict[int, int] = field(repr=False)

    # ------------------------------------------------------------------
    # Identity
    # ------------------------------------------------------------------

    @property
    def key(self) -> Tuple[str, int]:
        return (self.type_label, self.rank)

    @property
    def name(self) -> str:
        return f"{self.type_label}{self.rank}"

    @property
    def nodes(self) -> Tuple[int, ...]:
        """All affine nodes 0..n."""
        return tuple(range(self.rank + 1))

    @property
    def highest_index(self) -> int:
        return self.root_index[self.highest_root.coeffs]

    @property
    def num_positive_roots(self) -> int:
        return len(self.positive_roots)

    @property
    def simply_laced(self) -> bool:
        return self.type_label in ("A", "D", "E")

    def __repr__(self) -> str:
        return f"RootSystem({self.name})"

    # ------------------------------------------------------------------
    # Graph helpers
    # ------------------------------------------------------------------

    def finite_graph(self) -> nx.Graph:
        """The finite Dynkin diagram (the affine graph with s₀ removed)."""
        return self.affine_graph.subgraph(range(1, self.rank + 1))

    def neighbors(self, node: int) -> List[int]:
        return sorted(self.affine_graph.neighbors(node))

    def edge_multiplicity(self, u: int, v: int) -> int:
        return int(self.affine_graph.edges[u, v]["multiplicity"])

    # ------------------------------------------------------------------
    # Root lookups
    # ------------------------------------------------------------------

    def simple_root(self, i: int) -> Root:
        """α_i for 1 <= i <= n."""
        return self.positive_roots[i - 1]

    def find_root(self, coeffs: Sequence[int]) -> Optional[Root]:
        """Return the positive root with these coefficients, or ``None``."""
        idx = self.root_index.get(tuple(int(c) for c in coeffs))
        return None if idx is None else self.positive_roots[idx]

    def index_of(self, root: Root) -> int:
        """Index of a positive root in :attr:`positive_roots`."""
        try:
            return self.root_index[root.coeffs]
        except KeyError as exc:
            raise NotARoot(f"{root} is not a positive root of {self.name}") from exc

    def roots_supported_in(self, nodes: Iterable[int]) -> List[Root]:
        """Positive roots whose support lies inside the given finite nodes."""
        allowed = frozenset(nodes)
        return [r for r in self.positive_roots if r.support() <= allowed]

    def highest_root_of(self, nodes: Iterable[int]) -> Root:
        """Highest root of the subsystem spanned by a connected set of finite nodes."""
        candidates = self.roots_supported_in(nodes)
        if not candidates:
            raise NotARoot(f"No roots supported on {sorted(nodes)} in {self.name}")
        return max(candidates, key=lambda r: r.height)

    def chevalley_constant(self, node: int) -> int:
        """1 for long nodes, 2 for short nodes in B/C/F, 3 for the short node of G2."""
        long_sq = self.node_sq_lengths[0]
        return long_sq // self.node_sq_lengths[node]


# ---------------------------------------------------------------------------
# Construction
# ---------------------------------------------------------------------------

def _gram_matrix(type_label: str, rank: int) -> np.ndarray:
    sq = tables.squared_lengths(type_label, rank)
    gram = np.diag(np.array(sq, dtype=np.int64))
    for i, j in tables.dynkin_edges(type_label, rank):
        value = -max(sq[i - 1], sq[j - 1]) // 2
        gram[i - 1, j - 1] = value
        gram[j - 1, i - 1] = value
    return gram


def _positive_roots(cartan: np.ndarray) -> List[Tuple[int, ...]]:
    """Close the simple roots under simple reflections, keeping positive roots."""
    n = cartan.shape[0]
    simple = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
    seen = set(simple)
    queue = list(simple)
    while queue:
        root = queue.pop()
        vec = np.array(root, dtype=np.int64)
        for i in range(n):
            p = int(cartan[i] @ vec)
            if p == 0 or root == simple[i]:
                continue
            new = list(root)
            new[i] -= p
            if min(new) < 0:
                continue
            candidate = tuple(new)
            if candidate not in seen:
                seen.add(candidate)
                queue.append(candidate)
    return sorted(seen, key=lambda c: (sum(c), tuple(-x for x in c)))


@lru_cache(maxsize=None)
def build_root_system(type_label: str, rank: int) -> RootSystem:
    """
    Build (or fetch the shared instance of) the root system of the given type.

    Args:
        type_label: One of ``A``–``G`` (case-insensitive).
        rank:       Rank n.

    Returns:
        The :class:`RootSystem`.

    Raises:
        UnsupportedType: For any (type, rank) outside A_n (n≥1), B_n/C_n (n≥2),
                         D_n (n≥4), E6, E7, E8, F4, G2.
    """
    type_label = type_label.upper()
    tables.check_supported(type_label, rank)

    gram = _gram_matrix(type_label, rank)
    sq = np.diag(gram)
    cartan = (2 * gram) // sq[:, None]

    coeff_list = _positive_roots(cartan)
    root_matrix = np.array(coeff_list, dtype=np.int64)
    root_sq = np.einsum("ai,ij,aj->a", root_matrix, gram, root_matrix)
    long_sq = int(root_sq.max())
    positive_roots = tuple(
        Root(coeffs=c, length_class=LONG if int(s) == long_sq else SHORT)
        for c, s in zip(coeff_list, root_sq)
    )
    root_index = {r.coeffs: k for k, r in enumerate(positive_roots)}

    inner = root_matrix @ gram @ root_matrix.T
    pairing_matrix = (2 * inner) // root_sq[None, :]

    highest = max(positive_roots, key=lambda r: r.height)
    h_idx = root_index[highest.coeffs]
    marks = highest.coeffs
    alpha0_coroot = tuple(int(pairing_matrix[j, h_idx]) for j in range(rank))
    alpha0_on_simple = tuple(int(pairing_matrix[h_idx, j]) for j in range(rank))

    node_sq = {0: long_sq}
    node_sq.update({i + 1: int(sq[i]) for i in range(rank)})
    node_length_class = {
        node: (LONG if value == long_sq else SHORT) for node, value in node_sq.items()
    }

    graph = nx.Graph()
    for node in range(rank + 1):
        graph.add_node(
            node,
            name=f"s{node}",
            sq_length=node_sq[node],
            length_class=node_length_class[node],
        )

    def _add_edge(u: int, v: int, product: int) -> None:
        a1_double = product == 4
        short_end = None
        if node_sq[u] != node_sq[v]:
            short_end = u if node_sq[u] < node_sq[v] else v
        graph.add_edge(
            u, v,
            multiplicity=1 if a1_double else product,
            short_end=short_end,
            a1_double=a1_double,
        )

    for i, j in tables.dynkin_edges(type_label, rank):
        _add_edge(i, j, int(cartan[i - 1, j - 1] * cartan[j - 1, i - 1]))
    for j in range(rank):
        if alpha0_coroot[j]:
            _add_edge(0, j + 1, alpha0_coroot[j] * alpha0_on_simple[j])

    minuscule = frozenset(i + 1 for i, m in enumerate(marks) if m == 1)
    exps = tuple(tables.exponents(type_label, rank))

    rs = RootSystem(
        type_label=type_label,
        rank=rank,
        cartan=cartan,
        gram=gram,
        positive_roots=positive_roots,
        highest_root=highest,
        marks=marks,
        exponents=exps,
        degrees=tuple(e + 1 for e in exps),
        affine_graph=graph,
        minuscule=minuscule,
        node_length_class=node_length_class,
        root_matrix=root_matrix,
        pairing_matrix=pairing_matrix,
        root_index=root_index,
        alpha0_coroot=alpha0_coroot,
        node_sq_lengths=node_sq,
    )
    logger.debug(
        "Built %s: %d positive roots, highest root %s",
        rs.name, len(positive_roots), highest,
    )
    return rs


# ---------------------------------------------------------------------------
# Public operations
# ---------------------------------------------------------------------------

def in_coroot_lattice(rs: RootSystem, coords: Sequence[int]) -> bool:
    """
    Decide whether Σ a_i ω_i∨ lies in the coroot lattice Q∨.

    Args:
        rs:     The root system.
        coords: Fundamental-coweight coordinates (a_1, …, a_n).

    Returns:
        ``True`` iff the type's congruence holds (always for E8, F4, G2).

    Raises:
        LengthMismatch: If ``len(coords) != rs.rank``.
    """
    if len(coords) != rs.rank:
        raise LengthMismatch(
            f"{rs.name} expects {rs.rank} coordinates, got {len(coords)}"
        )
    a = [int(x) for x in coords]
    n = rs.rank
    t = rs.type_label

    def at(i: int) -> int:
        return a[i - 1]

    if t == "A":
        return sum(i * at(i) for i in range(1, n + 1)) % (n + 1) == 0
    if t == "B":
        return sum(at(i) for i in range(1, n + 1, 2)) % 2 == 0
    if t == "C":
        return at(n) % 2 == 0
    if t == "D":
        odd_sum = sum(at(i) for i in range(1, n - 1, 2))
        if n % 2:
            return (at(n - 1) - at(n) + 2 * odd_sum) % 4 == 0
        return (odd_sum + at(n - 1)) % 2 == 0 and (odd_sum + at(n)) % 2 == 0
    if t == "E" and n == 6:
        return (at(1) - at(3) + at(5) - at(6)) % 3 == 0
    if t == "E" and n == 7:
        return (at(2) + at(5) + at(7)) % 2 == 0
    return True


def _as_root_vector(rs: RootSystem, root: Root) -> np.ndarray:
    coeffs = tuple(root.coeffs)
    if len(coeffs) != rs.rank:
        raise NotARoot(f"{root} has {len(coeffs)} coefficients; {rs.name} has rank {rs.rank}")
    negated = tuple(-c for c in coeffs)
    if coeffs not in rs.root_index and negated not in rs.root_index:
        raise NotARoot(f"{root} is not a root of {rs.name}")
    return np.array(coeffs, dtype=np.int64)


def pairing(rs: RootSystem, alpha: Root, beta: Root) -> int:
    """
    Return α(β∨) = 2(α, β)/(β, β).

    Raises:
        NotARoot: If either argument is not a root of *rs*.
    """
    a = _as_root_vector(rs, alpha)
    b = _as_root_vector(rs, beta)
    num = 2 * int(a @ rs.gram @ b)
    den = int(b @ rs.gram @ b)
    return num // den


def minuscule_nodes(rs: RootSystem) -> FrozenSet[int]:
    """Nodes s ∈ S with mark m_s = 1."""
    return rs.minuscule
