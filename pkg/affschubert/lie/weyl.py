"""
lie/weyl.py
-----------
The coroot lattice Q∨ seen as labelled affine Dynkin diagrams.

An element λ ∈ Q∨ is stored by its fundamental-coweight coordinates
(a_1, …, a_n) with a_i = α_i(λ).  The label of s₀ is 1 − α₀(λ) and is always
derived.  Q∨ is identified with the minimal coset representatives of W̃/W, so
the simple reflections act on it by node firing:

* s_i (i ≥ 1):  a_j ↦ a_j − c_ij a_i
* s₀:           a_j ↦ a_j + α_j(α₀∨)(1 − α₀(λ))

Node firing is the only primitive; lengths, descents and words are all read
off the labels.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Sequence, Set, Tuple

import numpy as np

from affschubert.core.errors import (
    LengthMismatch,
    NotARoot,
    NotInCorootLattice,
    NotReduced,
    SystemMismatch,
)
from affschubert.lie.rootsys import Root, RootSystem, in_coroot_lattice

logger = logging.getLogger(__name__)

Coords = Tuple[int, ...]

# Coordinates stay far below this at any size that can be enumerated.
_MAX_COORD = 2 ** 40


# ---------------------------------------------------------------------------
# Node names
# ---------------------------------------------------------------------------

def node_name(node: int) -> str:
    return f"s{node}"


def parse_node(text: str) -> int:
    """Parse ``"s3"`` (or ``"3"``) into the node index 3."""
    raw = text.strip().lower()
    if raw.startswith("s"):
        raw = raw[1:]
    if not raw.isdigit():
        raise ValueError(f"Not a node name: {text!r}")
    return int(raw)


# ---------------------------------------------------------------------------
# CorootElement
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class CorootElement:
    """
    An element λ of the coroot lattice.

    Attributes:
        rs:     The root system λ belongs to.
        coords: (a_1, …, a_n) with a_i = α_i(λ).

    Raises:
        LengthMismatch:     If ``len(coords) != rs.rank``.
        NotInCorootLattice: If the coordinates fail the lattice congruence.
    """

    rs: RootSystem
    coords: Coords

    def __post_init__(self) -> None:
        coords = tuple(int(c) for c in self.coords)
        if len(coords) != self.rs.rank:
            raise LengthMismatch(
                f"{self.rs.name} expects {self.rs.rank} coordinates, got {len(coords)}"
            )
        if not in_coroot_lattice(self.rs, coords):
            raise NotInCorootLattice(f"{coords} is not in the coroot lattice of {self.rs.name}")
        object.__setattr__(self, "coords", coords)

    @classmethod
    def _trusted(cls, rs: RootSystem, coords: Coords) -> "CorootElement":
        """Wrap coordinates already known to lie in Q∨ (results of firing or reflecting)."""
        obj = object.__new__(cls)
        object.__setattr__(obj, "rs", rs)
        object.__setattr__(obj, "coords", coords)
        return obj

    @classmethod
    def zero(cls, rs: RootSystem) -> "CorootElement":
        return cls._trusted(rs, (0,) * rs.rank)

    @classmethod
    def parse(cls, rs: RootSystem, text: str) -> "CorootElement":
        """Parse the text form ``"3,0,-1"`` (surrounding parentheses allowed)."""
        body = text.strip().strip("()")
        try:
            coords = tuple(int(part) for part in body.split(",") if part.strip() != "")
        except ValueError as exc:
            raise ValueError(f"Cannot parse coordinates from {text!r}") from exc
        return cls(rs, coords)

    # ------------------------------------------------------------------
    # Equality and ordering
    # ------------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CorootElement):
            return NotImplemented
        return self.rs.key == other.rs.key and self.coords == other.coords

    def __hash__(self) -> int:
        return hash((self.rs.key, self.coords))

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.coords) + ")"

    def __repr__(self) -> str:
        return f"CorootElement({self.rs.name}, {self.coords})"

    def text(self) -> str:
        """Text form without parentheses: ``"3,0,-1"``."""
        return ",".join(str(c) for c in self.coords)

    # ------------------------------------------------------------------
    # Labels
    # ------------------------------------------------------------------

    @property
    def alpha0(self) -> int:
        """α₀(λ) = Σ m_i a_i."""
        return sum(m * a for m, a in zip(self.rs.marks, self.coords))

    @property
    def s0_label(self) -> int:
        return 1 - self.alpha0

    def label(self, node: int) -> int:
        """Value of the labelled diagram at *node* (``1 − α₀(λ)`` at s₀)."""
        if node == 0:
            return self.s0_label
        return self.coords[node - 1]

    def labels(self) -> Tuple[int, ...]:
        """Labels of s₀, s₁, …, s_n in that order."""
        return (self.s0_label,) + self.coords

    def is_zero(self) -> bool:
        return not any(self.coords)

    def is_dominant(self) -> bool:
        return all(a >= 0 for a in self.coords)


def sort_key(lam: CorootElement) -> Tuple[int, Coords]:
    """Serialized order: by lengthS, then lexicographic coordinates."""
    return (lengthS(lam), lam.coords)


# ---------------------------------------------------------------------------
# Raw coordinate kernels (shared with the enumeration core)
# ---------------------------------------------------------------------------

def root_values(rs: RootSystem, coords: Coords) -> np.ndarray:
    """α(λ) for every positive root α, in :attr:`RootSystem.positive_roots` order."""
    a = np.asarray(coords, dtype=np.int64)
    if a.size and int(np.abs(a).max()) > _MAX_COORD:
        raise OverflowError(f"Coordinates {coords} exceed the supported range")
    return rs.root_matrix @ a


def length_pair(rs: RootSystem, coords: Coords) -> Tuple[int, int]:
    """(ℓ(λ), q(λ)) from one pass over the root values."""
    values = root_values(rs, coords)
    return int(np.abs(values).sum()), int((values > 0).sum())


def lengthS_of(rs: RootSystem, coords: Coords) -> int:
    ell, q = length_pair(rs, coords)
    return ell - q


def label_of(rs: RootSystem, coords: Coords, node: int) -> int:
    if node == 0:
        return 1 - sum(m * a for m, a in zip(rs.marks, coords))
    return coords[node - 1]


def fire_coords(rs: RootSystem, coords: Coords, node: int) -> Coords:
    """Apply the simple reflection at *node* to raw coordinates."""
    if node == 0:
        shift = 1 - sum(m * a for m, a in zip(rs.marks, coords))
        if shift == 0:
            return coords
        return tuple(a + c * shift for a, c in zip(coords, rs.alpha0_coroot))
    value = coords[node - 1]
    if value == 0:
        return coords
    row = rs.cartan[node - 1]
    return tuple(a - int(c) * value for a, c in zip(coords, row))


def reflect_coords(rs: RootSystem, coords: Coords, beta_index: int, k: int) -> Coords:
    """Raw form of :func:`reflect` with β given by its index in Φ⁺."""
    beta_value = sum(
        m * a for m, a in zip(rs.positive_roots[beta_index].coeffs, coords)
    )
    shift = k - beta_value
    if shift == 0:
        return coords
    column = rs.pairing_matrix[: rs.rank, beta_index]
    return tuple(a + int(c) * shift for a, c in zip(coords, column))


# ---------------------------------------------------------------------------
# Public operations
# ---------------------------------------------------------------------------

def _check_root(rs: RootSystem, alpha: Root) -> int:
    if len(alpha.coeffs) != rs.rank or alpha.coeffs not in rs.root_index:
        raise SystemMismatch(f"{alpha} is not a positive root of {rs.name}")
    return rs.root_index[alpha.coeffs]


def eval_root(alpha: Root, lam: CorootElement) -> int:
    """
    Return α(λ) = Σ m_i(α) a_i.

    Raises:
        SystemMismatch: If *alpha* is not a positive root of ``lam.rs``.
    """
    _check_root(lam.rs, alpha)
    return sum(m * a for m, a in zip(alpha.coeffs, lam.coords))


def fire(lam: CorootElement, node: int) -> CorootElement:
    """
    Fire *node*: return sλ for the simple reflection s at that node.

    A node with label 0 is fixed, so λ is returned unchanged.
    """
    if not 0 <= node <= lam.rs.rank:
        raise ValueError(f"{lam.rs.name} has no node s{node}")
    return CorootElement._trusted(lam.rs, fire_coords(lam.rs, lam.coords, node))


def length(lam: CorootElement) -> int:
    """ℓ(λ) = Σ_{α>0} |α(λ)|."""
    return length_pair(lam.rs, lam.coords)[0]


def q_count(lam: CorootElement) -> int:
    """q(λ) = #{α > 0 : α(λ) > 0}."""
    return length_pair(lam.rs, lam.coords)[1]


def lengthS(lam: CorootElement) -> int:
    """ℓ^S(λ) = ℓ(λ) − q(λ), the dimension of X_λ."""
    return lengthS_of(lam.rs, lam.coords)


def descents(lam: CorootElement) -> FrozenSet[int]:
    """Negative nodes of the labelled diagram."""
    return frozenset(s for s, v in enumerate(lam.labels()) if v < 0)


def ascents(lam: CorootElement) -> FrozenSet[int]:
    """Positive nodes of the labelled diagram."""
    return frozenset(s for s, v in enumerate(lam.labels()) if v > 0)


def zero_nodes(lam: CorootElement) -> FrozenSet[int]:
    return frozenset(s for s, v in enumerate(lam.labels()) if v == 0)


# ---------------------------------------------------------------------------
# Reduced words
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ReducedWord:
    """
    A word t₁t₂⋯t_m over the affine nodes, read left to right.

    The element it represents is t₁t₂⋯t_m · 0, so t_m is the first node fired
    going up from 0 (always s₀ for a nonempty reduced word).
    """

    letters: Tuple[int, ...] = ()

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __str__(self) -> str:
        return " ".join(node_name(s) for s in self.letters)

    def names(self) -> List[str]:
        return [node_name(s) for s in self.letters]

    def firing_order(self) -> Tuple[int, ...]:
        """Nodes in the order they are fired going up from 0."""
        return tuple(reversed(self.letters))

    @classmethod
    def parse(cls, text: str) -> "ReducedWord":
        """Parse ``"s1 s0"``."""
        return cls(tuple(parse_node(tok) for tok in text.split()))


def word_for(lam: CorootElement) -> ReducedWord:
    """
    Fire down to 0, always at the smallest-index negative node.

    Returns:
        The recorded word t₁⋯t_m, with ``lambda_of(word_for(λ)) == λ``.
    """
    rs = lam.rs
    coords = lam.coords
    letters: List[int] = []
    while True:
        negative = [s for s in range(rs.rank + 1) if label_of(rs, coords, s) < 0]
        if not negative:
            break
        s = negative[0]
        letters.append(s)
        coords = fire_coords(rs, coords, s)
    if any(coords):
        # Only 0 has no negative node; reaching anything else would be a bug.
        raise RuntimeError(f"Descent from {lam} stopped at {coords}")
    return ReducedWord(tuple(letters))


def lambda_of(rs: RootSystem, word: ReducedWord) -> CorootElement:
    """
    Rebuild λ = t₁⋯t_m · 0 from a word, firing up from 0.

    Raises:
        NotReduced: If some step is not a strict ascent.
    """
    coords: Coords = (0,) * rs.rank
    for step, s in enumerate(word.firing_order(), start=1):
        if not 0 <= s <= rs.rank:
            raise NotReduced(f"Step {step}: {rs.name} has no node s{s}")
        if label_of(rs, coords, s) <= 0:
            raise NotReduced(f"Step {step}: s{s} is not an ascent of {coords}")
        coords = fire_coords(rs, coords, s)
    return CorootElement._trusted(rs, coords)


# ---------------------------------------------------------------------------
# Reflections
# ---------------------------------------------------------------------------

def reflect(lam: CorootElement, beta: Root, k: int) -> CorootElement:
    """
    Apply the affine reflection r_{k,β}: a_j ↦ a_j + α_j(β∨)(k − β(λ)).

    ``k = 0`` is the linear reflection s_β; ``k = 1`` is r_β = s_β + β∨ shift.

    Raises:
        NotARoot: If *beta* is not a positive root of ``lam.rs``.
    """
    rs = lam.rs
    if beta.coeffs not in rs.root_index:
        raise NotARoot(f"{beta} is not a positive root of {rs.name}")
    return CorootElement._trusted(
        rs, reflect_coords(rs, lam.coords, rs.root_index[beta.coeffs], k)
    )


def finite_orbit(lam: CorootElement) -> Set[CorootElement]:
    """The orbit Wλ under the finite Weyl group (firing s₁..s_n only)."""
    rs = lam.rs
    seen = {lam.coords}
    frontier = [lam.coords]
    while frontier:
        coords = frontier.pop()
        for s in range(1, rs.rank + 1):
            nxt = fire_coords(rs, coords, s)
            if nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return {CorootElement._trusted(rs, c) for c in seen}


def elements(rs: RootSystem, coords_list: Iterable[Sequence[int]]) -> List[CorootElement]:
    """Validate and wrap several coordinate vectors."""
    return [CorootElement(rs, tuple(c)) for c in coords_list]
