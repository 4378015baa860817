"""
verify/checks.py
----------------
Brute-force verification sweeps.

Each check compares a closed-form criterion against direct computation over
every λ up to a given ℓ^S and returns a
:class:`~affschubert.core.result_schema.CheckResult`.  :func:`run_verification`
runs them all for one root system and bundles the outcomes with the hash of
the configuration in force.
"""

from __future__ import annotations

import logging
from typing import Callable, Dict, List, Optional

from affschubert.core.config import DEFAULT_CONFIG, SchubertConfig
from affschubert.core.config_hashing import compute_config_hash
from affschubert.core.result_schema import CheckResult, VerificationReport
from affschubert.lie.moves import affine_descent, linear_descent
from affschubert.lie.rootsys import RootSystem
from affschubert.lie.weyl import CorootElement, lengthS, reflect
from affschubert.order.bruhat import BruhatEngine
from affschubert.order.series import bott_prefix, fork_stats
from affschubert.schubert.chains import (
    chain_pd,
    chain_pd_by_products,
    enumerate_chains,
    is_admissible_path,
)
from affschubert.schubert.cpo import enumerate_cpos
from affschubert.schubert.engine import ClassificationEngine
from affschubert.schubert.levi import orbit_decomposition

logger = logging.getLogger(__name__)

# Pairwise and per-root sweeps stop at this ℓ^S.
PAIRWISE_MAX_LEN = 8

# Mismatch lists are cut off after this many entries.
MAX_REPORTED = 20

Levels = Dict[int, List[CorootElement]]


def _result(check_id: str, description: str, checked: int, mismatches: List[str]) -> CheckResult:
    if mismatches:
        logger.warning("Check %s: %d mismatches", check_id, len(mismatches))
    return CheckResult(
        check_id=check_id,
        description=description,
        passed=not mismatches,
        checked=checked,
        mismatches=mismatches[:MAX_REPORTED],
    )


def _flatten(levels: Levels, max_len: Optional[int] = None) -> List[CorootElement]:
    return [
        lam
        for k in sorted(levels)
        if max_len is None or k <= max_len
        for lam in levels[k]
    ]


# ---------------------------------------------------------------------------
# Individual checks
# ---------------------------------------------------------------------------

def check_classification(levels: Levels, engine: ClassificationEngine) -> CheckResult:
    """Labels predict palindromy exactly."""
    mismatches: List[str] = []
    members = _flatten(levels)
    for lam in members:
        verdict = engine.classify(lam, cross_check=True)
        if not verdict.consistent:
            mismatches.append(
                f"{lam}: labels {verdict.labels}, brute force "
                f"palindromic={verdict.brute_force_palindromic}"
            )
    return _result(
        "classification", "classify().palindromic against |X_λ|(t)", len(members), mismatches
    )


def check_bott(rs: RootSystem, levels: Levels) -> CheckResult:
    """Level sizes equal the Bott series coefficients."""
    prefix = bott_prefix(rs, max(levels))
    mismatches = [
        f"level {k}: {len(levels[k])} elements, Bott coefficient {prefix[k]}"
        for k in sorted(levels)
        if len(levels[k]) != prefix[k]
    ]
    return _result(
        "bott", "enumerate_levels sizes against the Bott series", len(levels), mismatches
    )


def check_oracle(levels: Levels, bruhat: BruhatEngine) -> CheckResult:
    """Cover-sweep comparison against the subword oracle, plus window doubling."""
    members = _flatten(levels, PAIRWISE_MAX_LEN)
    mismatches: List[str] = []
    checked = 0
    for lam in members:
        doubled = bruhat.covers(lam, window_scale=2 * bruhat.config.window_scale)
        if doubled != bruhat.covers(lam):
            mismatches.append(f"covers({lam}) changes when the reflection window doubles")
        for mu in members:
            checked += 1
            if bruhat.bruhat_leq(mu, lam) != bruhat.subword_leq(mu, lam):
                mismatches.append(f"{mu} ≤ {lam}: cover sweep and subword oracle disagree")
    return _result("oracle", "bruhat_leq against subword_leq", checked, mismatches)


def check_descents(rs: RootSystem, levels: Levels) -> CheckResult:
    """Pair criteria for linear and affine descents against ℓ^S recomputation."""
    mismatches: List[str] = []
    checked = 0
    for lam in _flatten(levels, PAIRWISE_MAX_LEN):
        target = lengthS(lam) - 1
        for beta in rs.positive_roots:
            checked += 1
            linear = lengthS(reflect(lam, beta, 0)) == target
            if linear_descent(lam, beta) != linear:
                mismatches.append(f"linear descent of {lam} along {beta}: expected {linear}")
            affine = lengthS(reflect(lam, beta, 1)) == target
            if affine_descent(lam, beta) != affine:
                mismatches.append(f"affine descent of {lam} along {beta}: expected {affine}")
    return _result("descents", "descent criteria against ℓ^S", checked, mismatches)


def check_cpos(rs: RootSystem, max_len: int, bruhat: BruhatEngine) -> CheckResult:
    """Every closed parabolic orbit within reach is palindromic of degree |A_I|."""
    mismatches: List[str] = []
    checked = 0
    for cpo in enumerate_cpos(rs, bruhat):
        if cpo.trivial or cpo.dim > max_len:
            continue
        checked += 1
        poly = bruhat.poincare_polynomial(cpo.top)
        if not poly.is_palindromic() or poly.degree != cpo.a_size:
            mismatches.append(f"cpo {cpo.top}: |X|(t) = {poly}, |A_I| = {cpo.a_size}")
    return _result("cpos", "closed parabolic orbits are palindromic", checked, mismatches)


def check_rule1(levels: Levels, bruhat: BruhatEngine) -> CheckResult:
    """Every non-trivial palindromic λ has exactly one negative node."""
    mismatches: List[str] = []
    members = [lam for lam in _flatten(levels) if not lam.is_zero()]
    for lam in members:
        negatives = [v for v in lam.labels() if v < 0]
        if bruhat.is_palindromic(lam) and len(negatives) != 1:
            mismatches.append(f"{lam} is palindromic with {len(negatives)} negative nodes")
    return _result("rule1", "palindromic λ have one negative node", len(members), mismatches)


def check_chains(rs: RootSystem, max_len: int, bruhat: BruhatEngine) -> CheckResult:
    """Chain words are admissible and both duality tests agree."""
    if max_len < 1:
        return _result("chains", "chain words and duality tests", 0, [])
    mismatches: List[str] = []
    chains = enumerate_chains(rs, max_len, bruhat)
    for chain in chains:
        if not is_admissible_path(rs, chain.word):
            mismatches.append(f"chain {chain.top} has non-admissible word {chain.word}")
        if chain_pd(chain) != chain_pd_by_products(chain):
            mismatches.append(f"chain {chain.top}: duality tests disagree")
    return _result("chains", "chain words and duality tests", len(chains), mismatches)


def check_levi(rs: RootSystem, max_len: int, bruhat: BruhatEngine) -> CheckResult:
    """Orbit decompositions for each maximal I ∋ s₀ reproduce the Bott prefix."""
    expected = bott_prefix(rs, max_len).to_polynomial()
    mismatches: List[str] = []
    for omitted in range(1, rs.rank + 1):
        nodes = [s for s in rs.nodes if s != omitted]
        got = orbit_decomposition(rs, nodes, max_len, bruhat)
        if got != expected:
            mismatches.append(f"I = {nodes}: Σ p_λ(t) = {got}, Bott prefix {expected}")
    return _result("levi", "orbit decomposition against the Bott series", rs.rank, mismatches)


def check_forks(rs: RootSystem) -> CheckResult:
    """Series-based and path-based fork statistics agree."""
    try:
        fork_stats(rs)
    except RuntimeError as exc:
        return _result("forks", "k_G from the series and from the path", 1, [str(exc)])
    return _result("forks", "k_G from the series and from the path", 1, [])


# ---------------------------------------------------------------------------
# Sweep
# ---------------------------------------------------------------------------

def run_verification(
    rs: RootSystem, max_len: int, config: Optional[SchubertConfig] = None
) -> VerificationReport:
    """
    Run every check over λ with ℓ^S(λ) ≤ *max_len*.

    Args:
        rs:      Root system to sweep.
        max_len: Largest ℓ^S included.
        config:  Limits for the engines (defaults to :data:`DEFAULT_CONFIG`).

    Returns:
        A :class:`VerificationReport`; ``report.passed`` is ``False`` on any mismatch.

    Raises:
        ValueError:    If *max_len* is negative.
        ResourceLimit: If an enumeration exceeds its cap.
    """
    config = config or DEFAULT_CONFIG
    config.validate()
    bruhat = BruhatEngine(config)
    classifier = ClassificationEngine(config, bruhat=bruhat)
    levels = bruhat.enumerate_levels(rs, max_len)

    steps: List[Callable[[], CheckResult]] = [
        lambda: check_classification(levels, classifier),
        lambda: check_bott(rs, levels),
        lambda: check_oracle(levels, bruhat),
        lambda: check_descents(rs, levels),
        lambda: check_cpos(rs, max_len, bruhat),
        lambda: check_rule1(levels, bruhat),
        lambda: check_chains(rs, max_len, bruhat),
        lambda: check_levi(rs, max_len, bruhat),
        lambda: check_forks(rs),
    ]
    report = VerificationReport(
        type_label=rs.type_label,
        rank=rs.rank,
        max_len=max_len,
        config_hash=compute_config_hash(config),
    )
    for step in steps:
        result = step()
        logger.debug(
            "%s %s: %s (%d checked)", rs.name, result.check_id, result.status, result.checked
        )
        report.checks.append(result)
    return report
