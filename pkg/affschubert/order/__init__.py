"""order sub-package — Bruhat order, Poincaré polynomials and the Bott series."""

from affschubert.order.bruhat import BruhatEngine, OrderIdeal, default_engine
from affschubert.order.polynomial import IntPolynomial
from affschubert.order.series import bott_prefix, fork_stats, q_binomial

__all__ = [
    "BruhatEngine",
    "OrderIdeal",
    "default_engine",
    "IntPolynomial",
    "bott_prefix",
    "fork_stats",
    "q_binomial",
]
