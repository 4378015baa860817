"""
core/result_schema.py
---------------------
Structured, typed result objects returned by the classification engine and
the verification sweeps.

Classes
-------
* :class:`ClassificationVerdict` — labels and palindromy verdict for one λ.
* :class:`CheckResult`           — outcome of one verification check.
* :class:`VerificationReport`    — every check of a sweep plus the config hash.

All JSON output uses sorted keys and carries no timestamps, so identical runs
produce identical bytes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

#: Canonical label order for output.
LABEL_ORDER: Tuple[str, ...] = ("CPO", "Chain", "Spiral", "ExceptionalB3")


def ordered_labels(labels: Any) -> List[str]:
    """Sort labels into :data:`LABEL_ORDER`, unknown labels last and alphabetical."""
    known = [lab for lab in LABEL_ORDER if lab in labels]
    extra = sorted(lab for lab in labels if lab not in LABEL_ORDER)
    return known + extra


# ---------------------------------------------------------------------------
# ClassificationVerdict
# ---------------------------------------------------------------------------

@dataclass
class ClassificationVerdict:
    """
    Classification of a single Schubert variety X_λ.

    Attributes:
        type_label:  Lie type of the root system.
        rank:        Its rank.
        coords:      λ in fundamental-coweight coordinates.
        labels:      Which of CPO, Chain, Spiral, ExceptionalB3 hold.
        palindromic: ``True`` iff ``labels`` is nonempty.
        smooth:      ``True`` iff ``"CPO"`` is among the labels.
        dim:         ℓ^S(λ).
        poincare:    Coefficients of |X_λ|(t), when computed.
        brute_force_palindromic: Palindromy read off |X_λ|(t) directly.
    """

    type_label: str
    rank: int
    coords: Tuple[int, ...]
    labels: List[str]
    palindromic: bool
    smooth: bool
    dim: int
    poincare: Optional[List[int]] = None
    brute_force_palindromic: Optional[bool] = None

    @property
    def consistent(self) -> bool:
        """False only when the brute-force check ran and disagrees."""
        if self.brute_force_palindromic is None:
            return True
        return self.brute_force_palindromic == self.palindromic

    @property
    def key(self) -> Tuple[str, int, Tuple[int, ...]]:
        return (self.type_label, self.rank, tuple(self.coords))

    def to_dict(self) -> Dict[str, Any]:
        """
        Serialise to a plain dictionary.

        Returns:
            Dict with ``type``, ``rank``, ``lambda``, ``labels``,
            ``palindromic``, ``smooth``, ``dim`` and, when known, ``poincare``.
        """
        out: Dict[str, Any] = {
            "type": self.type_label,
            "rank": self.rank,
            "lambda": list(self.coords),
            "labels": ordered_labels(self.labels),
            "palindromic": self.palindromic,
            "smooth": self.smooth,
            "dim": self.dim,
        }
        if self.poincare is not None:
            out["poincare"] = list(self.poincare)
        if self.brute_force_palindromic is not None:
            out["brute_force_palindromic"] = self.brute_force_palindromic
        return out

    def to_json(self, indent: Optional[int] = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, sort_keys=True, ensure_ascii=False)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "ClassificationVerdict":
        """
        Rebuild a verdict from :meth:`to_dict` output.

        Raises:
            KeyError:   If a required field is missing.
            TypeError:  If a field has the wrong shape.
        """
        poincare = data.get("poincare")
        return cls(
            type_label=str(data["type"]),
            rank=int(data["rank"]),
            coords=tuple(int(x) for x in data["lambda"]),
            labels=[str(x) for x in data["labels"]],
            palindromic=bool(data["palindromic"]),
            smooth=bool(data["smooth"]),
            dim=int(data["dim"]),
            poincare=None if poincare is None else [int(x) for x in poincare],
            brute_force_palindromic=data.get("brute_force_palindromic"),
        )


# ---------------------------------------------------------------------------
# CheckResult
# ---------------------------------------------------------------------------

@dataclass
class CheckResult:
    """
    Outcome of one verification check.

    Attributes:
        check_id:    Stable identifier (e.g. ``"classification"``).
        description: What was compared.
        passed:      ``True`` when no mismatch was found.
        checked:     Number of cases examined.
        mismatches:  Human-readable descriptions of each failing case.
    """

    check_id: str
    description: str
    passed: bool
    checked: int = 0
    mismatches: List[str] = field(default_factory=list)

    @property
    def status(self) -> str:
        return "PASS" if self.passed else "FAIL"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "check": self.check_id,
            "description": self.description,
            "status": self.status,
            "passed": self.passed,
            "checked": self.checked,
            "mismatches": list(self.mismatches),
        }


# ---------------------------------------------------------------------------
# VerificationReport
# ---------------------------------------------------------------------------

@dataclass
class VerificationReport:
    """
    All checks of one verification sweep.

    Attributes:
        type_label:  Lie type swept.
        rank:        Rank swept.
        max_len:     Largest ℓ^S included.
        config_hash: SHA-256 of the configuration in force.
        checks:      Individual check outcomes, in run order.
    """

    type_label: str
    rank: int
    max_len: int
    config_hash: str
    checks: List[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failed_checks(self) -> List[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "type": self.type_label,
            "rank": self.rank,
            "max_len": self.max_len,
            "config_hash": self.config_hash,
            "status": "PASS" if self.passed else "FAIL",
            "checks": [c.to_dict() for c in self.checks],
        }

    def to_json(self, indent: Optional[int] = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, sort_keys=True, ensure_ascii=False)
