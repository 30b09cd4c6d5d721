"""Enumerators, samplers, brute-force poset oracles and the property-suite runner."""

from .poset import PosetTable, brute_force_poset_ops
from .suites import SUITE_NAMES, Failure, SuiteReport, ring_poset, run_suite, run_suites, shrink
from .universe import RingUniverse, enumerate_ring, sample_matrix

__all__ = [
    "PosetTable",
    "brute_force_poset_ops",
    "SUITE_NAMES",
    "Failure",
    "SuiteReport",
    "ring_poset",
    "run_suite",
    "run_suites",
    "shrink",
    "RingUniverse",
    "enumerate_ring",
    "sample_matrix",
]
