"""core sub-package — configuration, errors, result objects and the verdict cache."""

from affschubert.core.config import DEFAULT_CONFIG, SchubertConfig
from affschubert.core.config_hashing import compute_config_hash
from affschubert.core.errors import ResourceLimit, SchubertError
from affschubert.core.result_schema import CheckResult, ClassificationVerdict, VerificationReport
from affschubert.core.store import VerdictCache

__all__ = [
    "SchubertConfig",
    "DEFAULT_CONFIG",
    "compute_config_hash",
    "SchubertError",
    "ResourceLimit",
    "ClassificationVerdict",
    "CheckResult",
    "VerificationReport",
    "VerdictCache",
]
