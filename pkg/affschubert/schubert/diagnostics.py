"""
schubert/diagnostics.py
-----------------------
Palindromy diagnostics for a single λ.

These are the quick necessary conditions used to rule palindromy out by
inspecting the labelled diagram, together with the named moves found below
λ and the shape of the Hasse diagram just under the top.  None of them feed
into :func:`affschubert.schubert.engine.classify`.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

from affschubert.lie.moves import NamedMove, detect_named_moves
from affschubert.lie.weyl import CorootElement
from affschubert.order.bruhat import BruhatEngine, default_engine
from affschubert.schubert.chains import pd_necessary

logger = logging.getLogger(__name__)

PAIR = "pair"
FORK = "fork"
TRIDENT = "trident"


@dataclass(frozen=True)
class PalindromyReport:
    """
    Diagnostics for λ.

    Attributes:
        lam:            λ.
        negative_nodes: Nodes with negative label.
        rule1:          Exactly one negative node.
        rule2:          Outside type A, at most one zero node next to the
                        negative node (``None`` without a unique one).
        rule3:          If the negative node is not s₀ then α₀(λ) ≤ 1.
        overweight:     Rule 3 fails, or s₀ is the negative node and α₀(λ) > 2.
        forks_too_soon: The down-set forks within k_G levels of the top.
        pd_necessary:   The integral duality precondition holds.
        hasse_pattern:  ``pair``, ``fork``, ``trident`` or ``None``.
        palindromic:    Brute-force verdict.
        moves:          Verified named moves below λ.
    """

    lam: CorootElement
    negative_nodes: Tuple[int, ...]
    rule1: bool
    rule2: Optional[bool]
    rule3: Optional[bool]
    overweight: bool
    forks_too_soon: bool
    pd_necessary: bool
    hasse_pattern: Optional[str]
    palindromic: bool
    moves: Tuple[NamedMove, ...]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "lambda": list(self.lam.coords),
            "negative_nodes": [f"s{s}" for s in self.negative_nodes],
            "rule1": self.rule1,
            "rule2": self.rule2,
            "rule3": self.rule3,
            "overweight": self.overweight,
            "forks_too_soon": self.forks_too_soon,
            "pd_necessary": self.pd_necessary,
            "hasse_pattern": self.hasse_pattern,
            "palindromic": self.palindromic,
            "moves": [m.to_dict() for m in self.moves],
        }

    def to_json(self, indent: int = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)


def hasse_pattern(lam: CorootElement, engine: Optional[BruhatEngine] = None) -> Optional[str]:
    """
    Shape of the cover graph just below λ.

    ``pair`` if λ covers two or more elements; otherwise ``fork`` or
    ``trident`` when the single element below covers two or three.
    """
    engine = engine or default_engine()
    below = engine.covers(lam)
    if len(below) >= 2:
        return PAIR
    if len(below) == 1:
        (mu,) = tuple(below)
        branching = len(engine.covers(mu))
        if branching == 2:
            return FORK
        if branching == 3:
            return TRIDENT
    return None


def palindromy_report(
    lam: CorootElement, engine: Optional[BruhatEngine] = None
) -> PalindromyReport:
    """
    Collect every palindromy diagnostic for λ.

    Args:
        lam:    λ.
        engine: Bruhat engine (defaults to the shared one).
    """
    engine = engine or default_engine()
    rs = lam.rs
    labels = lam.labels()
    negative = tuple(s for s, v in enumerate(labels) if v < 0)
    rule1 = len(negative) == 1

    rule2: Optional[bool] = None
    rule3: Optional[bool] = None
    overweight = False
    if rule1:
        s = negative[0]
        if rs.type_label == "A":
            rule2 = True
        else:
            zeros: List[int] = [t for t in rs.neighbors(s) if labels[t] == 0]
            rule2 = len(zeros) < 2
        rule3 = s == 0 or lam.alpha0 <= 1
        overweight = (not rule3) or (s == 0 and lam.alpha0 > 2)

    report = PalindromyReport(
        lam=lam,
        negative_nodes=negative,
        rule1=rule1,
        rule2=rule2,
        rule3=rule3,
        overweight=overweight,
        forks_too_soon=engine.forks_too_soon(lam),
        pd_necessary=pd_necessary(lam),
        hasse_pattern=hasse_pattern(lam, engine),
        palindromic=engine.is_palindromic(lam),
        moves=tuple(detect_named_moves(lam)),
    )
    logger.debug("Palindromy report for %s: %s", lam, report.to_dict())
    return report
