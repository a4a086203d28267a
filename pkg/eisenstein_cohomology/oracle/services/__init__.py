"""
Services for the oracle app.

Re-exports:
- enumerate_weyl, brute_kostant, brute_t, brute_mu, brute_scan from enumeration.py
- SuiteReport, run_rank, run_suite, VerificationService from suite.py
"""

from eisenstein_cohomology.oracle.services.enumeration import (
    brute_kostant,
    brute_mu,
    brute_scan,
    brute_t,
    enumerate_weyl,
)
from eisenstein_cohomology.oracle.services.suite import (
    SuiteFailure,
    SuiteReport,
    VerificationService,
    run_rank,
    run_suite,
)

__all__ = [
    "brute_kostant",
    "brute_mu",
    "brute_scan",
    "brute_t",
    "enumerate_weyl",
    "SuiteFailure",
    "SuiteReport",
    "VerificationService",
    "run_rank",
    "run_suite",
]
