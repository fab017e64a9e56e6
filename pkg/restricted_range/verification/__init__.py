"""Verification Harness

Cross-checks formulas and characterizations against brute force.

Exports:
- run_suite: dispatch by suite name ("all" runs every suite)
- verify_*: the individual suites
"""

from .verify import (
    SUITES,
    universes,
    verify_counts,
    verify_relations,
    verify_regularity,
    verify_abundance,
    verify_stirling,
    verify_witnesses,
    run_suite,
)

__all__ = [
    "SUITES",
    "universes",
    "verify_counts",
    "verify_relations",
    "verify_regularity",
    "verify_abundance",
    "verify_stirling",
    "verify_witnesses",
    "run_suite",
]
