"""
Verification package for Submodel Lab.
Bounded claim checks, the universal-consequence sieve, demos and the CLI.
"""
from .demos import DEMOS, DemoConfig, run_demo
from .harness import check_equiv, theta_star_membership, witness_bound_scan
from .report import Counterexample, Parameters, Report, Verdict, worst
from .sieve import SieveResult, generate_candidates, universal_consequence_sieve

__all__ = [
    "DEMOS",
    "DemoConfig",
    "run_demo",
    "check_equiv",
    "theta_star_membership",
    "witness_bound_scan",
    "Counterexample",
    "Parameters",
    "Report",
    "Verdict",
    "worst",
    "SieveResult",
    "generate_candidates",
    "universal_consequence_sieve",
]
