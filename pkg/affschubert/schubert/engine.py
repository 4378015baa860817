"""
schubert/engine.py
------------------
Classification of Schubert varieties X_λ.

Every registered label in :mod:`affschubert.schubert.rules` is evaluated;
X_λ is palindromic exactly when some label holds, and smooth exactly when it
is a closed parabolic orbit.  With ``cross_check=True`` the verdict also
records the brute-force palindromy of |X_λ|(t), so sweeps can assert the two
agree.
"""

from __future__ import annotations

import logging
from typing import Iterable, List, Optional

from affschubert.core.config import DEFAULT_CONFIG, SchubertConfig
from affschubert.core.result_schema import ClassificationVerdict, ordered_labels
from affschubert.lie.weyl import CorootElement, lengthS
from affschubert.order.bruhat import BruhatEngine, default_engine
from affschubert.schubert.rules import get_registered_labels

logger = logging.getLogger(__name__)


class ClassificationEngine:
    """
    Evaluates the classification labels for λ.

    Args:
        config: Limits for the underlying :class:`BruhatEngine`.
        bruhat: An existing engine to share caches with.

    Example::

        from affschubert.lie.rootsys import build_root_system
        from affschubert.lie.weyl import CorootElement
        from affschubert.schubert.engine import ClassificationEngine

        rs = build_root_system("B", 3)
        verdict = ClassificationEngine().classify(CorootElement(rs, (3, 0, -1)))
        print(verdict.labels)        # ['ExceptionalB3']
    """

    def __init__(
        self,
        config: Optional[SchubertConfig] = None,
        bruhat: Optional[BruhatEngine] = None,
    ) -> None:
        self.config = config or DEFAULT_CONFIG
        if bruhat is not None:
            self.bruhat = bruhat
        elif config is None:
            self.bruhat = default_engine()
        else:
            self.bruhat = BruhatEngine(self.config)

    def __repr__(self) -> str:
        return f"ClassificationEngine({self.bruhat!r})"

    def labels(self, lam: CorootElement) -> List[str]:
        found = []
        for label_id, label_class in get_registered_labels().items():
            if label_class().holds(lam, self.bruhat):
                found.append(label_id)
        return ordered_labels(found)

    def classify(self, lam: CorootElement, cross_check: bool = False) -> ClassificationVerdict:
        """
        Classify X_λ.

        Args:
            lam:         λ.
            cross_check: Also compute |X_λ|(t) and record its palindromy.

        Returns:
            A :class:`ClassificationVerdict`.

        Raises:
            ResourceLimit: If the order ideal needed exceeds the configured cap.
        """
        registry = get_registered_labels()
        labels = self.labels(lam)
        smooth = any(registry[label].smooth for label in labels)
        verdict = ClassificationVerdict(
            type_label=lam.rs.type_label,
            rank=lam.rs.rank,
            coords=lam.coords,
            labels=labels,
            palindromic=bool(labels),
            smooth=smooth,
            dim=lengthS(lam),
        )
        if cross_check:
            poly = self.bruhat.poincare_polynomial(lam)
            verdict.poincare = poly.to_list()
            verdict.brute_force_palindromic = poly.is_palindromic()
            if not verdict.consistent:
                logger.warning(
                    "%s %s: labels %s but brute-force palindromic=%s",
                    lam.rs.name, lam, labels, verdict.brute_force_palindromic,
                )
        logger.debug("Classified %s %s: %s", lam.rs.name, lam, labels)
        return verdict

    def classify_many(
        self, lams: Iterable[CorootElement], cross_check: bool = False
    ) -> List[ClassificationVerdict]:
        return [self.classify(lam, cross_check=cross_check) for lam in lams]


def classify(lam: CorootElement, cross_check: bool = False) -> ClassificationVerdict:
    """Classify λ with the shared default engine."""
    return ClassificationEngine().classify(lam, cross_check=cross_check)
