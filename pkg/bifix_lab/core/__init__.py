"""
Core modules for Bifix Lab

Contains the fundamental types:
- Alphabet and words as tuples of letter indices
- Morphism, FixpointSpec and FactorSet: finite slices of factorial sets
- ExtensionProfile, ExtensionGraph and SetVerdict: extension analysis
- BifixCode: codes inside a factor set, their degree and transformations
- GroupWord and SubgroupGraph: subgroups of the free group by folding
"""

from .alphabet import Alphabet, Word
from .codes import (
    BifixCode,
    bifix_decode,
    code_predicates,
    coding_morphism,
    enumerate_s_maximal_bifix,
    internal_transformation,
    is_s_maximal,
    parses,
    s_degree,
    uniform_code,
)
from .errors import BifixLabError, CodeError, HorizonError
from .extensions import (
    ExtensionGraph,
    ExtensionProfile,
    SetVerdict,
    classify_set,
    classify_word,
    extension_graph,
    extension_profile,
)
from .groups import (
    GroupWord,
    IndexMarker,
    SubgroupGraph,
    contains,
    is_basis,
    stallings_fold,
    subgroup_index,
    subgroup_rank,
)
from .words import FactorSet, FixpointSpec, Morphism, build_morphism, complexity_profile

__all__ = [
    "Alphabet",
    "Word",
    "BifixCode",
    "bifix_decode",
    "code_predicates",
    "coding_morphism",
    "enumerate_s_maximal_bifix",
    "internal_transformation",
    "is_s_maximal",
    "parses",
    "s_degree",
    "uniform_code",
    "BifixLabError",
    "CodeError",
    "HorizonError",
    "ExtensionGraph",
    "ExtensionProfile",
    "SetVerdict",
    "classify_set",
    "classify_word",
    "extension_graph",
    "extension_profile",
    "GroupWord",
    "IndexMarker",
    "SubgroupGraph",
    "contains",
    "is_basis",
    "stallings_fold",
    "subgroup_index",
    "subgroup_rank",
    "FactorSet",
    "FixpointSpec",
    "Morphism",
    "build_morphism",
    "complexity_profile",
]
