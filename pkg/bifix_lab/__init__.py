"""
Bifix Lab - Factor Sets, Bifix Codes and Subgroups of Free Groups

Finite, horizon-qualified computations on factorial sets of words: morphic
fixpoints and their factors, extension graphs and the tree/neutral/acyclic
classes, maximal bifix codes with their degree and transformations, and the
subgroups these codes generate in the free group. A theorem lab checks the
relations between these objects over a registry of classical examples.

Core Ideas:
- Every answer is certified only up to an explicit horizon
- Words are tuples of letter indices over an explicit alphabet
- Subgroups are handled through folded graphs
"""

__version__ = "0.1.0"
__author__ = "Safal207"
__description__ = "Bifix Lab - maximal bifix codes, extension graphs and free groups"

from .core import (
    Alphabet,
    BifixCode,
    FactorSet,
    FixpointSpec,
    SubgroupGraph,
    classify_set,
    stallings_fold,
)
from .lab import default_registry, run_suite

__all__ = [
    "Alphabet",
    "BifixCode",
    "FactorSet",
    "FixpointSpec",
    "SubgroupGraph",
    "classify_set",
    "stallings_fold",
    "default_registry",
    "run_suite",
]
