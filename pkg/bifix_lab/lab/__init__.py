"""
Theorem lab for Bifix Lab

- ExampleRegistry: named example sets with expected classes and failures
- Verifiers returning TheoremReport objects
- TheoremLab / run_suite: the whole registry in one report
"""

from .registry import ExampleRegistry, RegistryEntry, default_registry
from .suite import LabEvent, SuiteReport, TheoremLab, run_suite
from .theorems import TheoremId, TheoremReport, Verdict

__all__ = [
    "ExampleRegistry",
    "RegistryEntry",
    "default_registry",
    "LabEvent",
    "SuiteReport",
    "TheoremLab",
    "run_suite",
    "TheoremId",
    "TheoremReport",
    "Verdict",
]
