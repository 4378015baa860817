"""verify sub-package — brute-force agreement sweeps."""

from affschubert.verify.checks import run_verification

__all__ = ["run_verification"]
