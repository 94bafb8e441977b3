"""Exact identity checks, positivity scans and the Jensen convergence table."""

from .convergence import ConvergenceTable, jensen_convergence
from .identities import (
    DEFAULT_SPECS,
    IdentityId,
    default_specs_for,
    double_gap_conjecture,
    printed_constant_cases,
    supports,
    verify_all,
    verify_identity,
)
from .plan import DEFAULT_POOL, DEFAULT_SEED, SamplePlan
from .positivity import positivity_scan
from .report import Failure, VerifyReport
from .selberg import selberg_integral

__all__ = [
    "ConvergenceTable",
    "DEFAULT_POOL",
    "DEFAULT_SEED",
    "DEFAULT_SPECS",
    "Failure",
    "IdentityId",
    "SamplePlan",
    "VerifyReport",
    "default_specs_for",
    "double_gap_conjecture",
    "jensen_convergence",
    "positivity_scan",
    "printed_constant_cases",
    "selberg_integral",
    "supports",
    "verify_all",
    "verify_identity",
]
