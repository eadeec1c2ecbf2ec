"""
Extensions - Extension Sets, Extension Graphs and Set Classification

For a word w of a factor set S this module computes the letters extending w
on the left and right, the two-sided extensions E(w), the multiplicity
m(w) = e(w) - l(w) - r(w) + 1 and the bipartite extension graph G(w).

Key Responsibilities:
- ExtensionProfile and ExtensionGraph for a single word
- Strong / weak / neutral / ordinary / acyclic / tree classification
- Set-level verdicts certified up to an explicit length
- Counting identities relating complexity to extensions
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, FrozenSet, List, Optional, Tuple

import networkx as nx
from networkx.utils import UnionFind

from .alphabet import Word
from .errors import BiextendabilityError, WordNotInSetError
from .words import FactorSet, complexity_profile

logger = logging.getLogger(__name__)

Vertex = Tuple[str, int]  # ("L", a) or ("R", b)

SET_FLAGS = ("strong", "weak", "neutral", "acyclic", "tree")


class WordClass(Enum):
    """Sign of m(w)."""
    STRONG = "strong"
    WEAK = "weak"
    NEUTRAL = "neutral"


@dataclass(frozen=True)
class ExtensionProfile:
    """L(w), R(w) and E(w) of one word."""

    word: Word
    left: FrozenSet[int]
    right: FrozenSet[int]
    pairs: FrozenSet[Tuple[int, int]]

    @property
    def ell(self) -> int:
        return len(self.left)

    @property
    def r(self) -> int:
        return len(self.right)

    @property
    def e(self) -> int:
        return len(self.pairs)

    @property
    def m(self) -> int:
        return self.e - self.ell - self.r + 1

    @property
    def word_class(self) -> WordClass:
        if self.m > 0:
            return WordClass.STRONG
        if self.m < 0:
            return WordClass.WEAK
        return WordClass.NEUTRAL

    @property
    def is_bispecial(self) -> bool:
        return self.ell >= 2 and self.r >= 2

    def is_ordinary(self) -> bool:
        """E(w) lies inside the row and column through one of its pairs."""
        return any(
            all(x == a or y == b for x, y in self.pairs) for a, b in self.pairs
        )


@dataclass(frozen=True)
class ExtensionGraph:
    """
    Bipartite graph on a left copy of L(w) and a right copy of R(w).

    components and cycle are filled in by extension_graph(); cycle is a closed
    vertex walk when the graph is not acyclic.
    """

    word: Word
    left: FrozenSet[int]
    right: FrozenSet[int]
    edges: FrozenSet[Tuple[int, int]]
    components: int = 0
    cycle: Optional[Tuple[Vertex, ...]] = None

    @property
    def is_acyclic(self) -> bool:
        return self.cycle is None

    @property
    def is_tree(self) -> bool:
        return self.is_acyclic and self.components == 1

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(("L", a) for a in sorted(self.left))
        graph.add_nodes_from(("R", b) for b in sorted(self.right))
        graph.add_edges_from((("L", a), ("R", b)) for a, b in sorted(self.edges))
        return graph


def extension_profile(S: FactorSet, w: Word) -> ExtensionProfile:
    """
    Compute L(w), R(w), E(w) from S.

    Raises:
        HorizonError: |w| > N - 2
        WordNotInSetError: w is not in S
    """
    S.require(len(w) + 2, "extension_profile")
    if w not in S:
        raise WordNotInSetError(f"{S.alphabet.render(w)} is not in {S.name or 'the set'}")
    left = S.left_extensions(w)
    right = S.right_extensions(w)
    layer = S.layers[len(w) + 2]
    pairs = frozenset(
        (a, b) for a in left for b in right if (a,) + w + (b,) in layer
    )
    return ExtensionProfile(w, frozenset(left), frozenset(right), pairs)


def extension_graph(S: FactorSet, w: Word) -> ExtensionGraph:
    """Build G(w) and find its components and a cycle, if any, by union-find."""
    profile = extension_profile(S, w)
    return _graph_of(profile)


def _graph_of(profile: ExtensionProfile) -> ExtensionGraph:
    vertices: List[Vertex] = [("L", a) for a in sorted(profile.left)]
    vertices += [("R", b) for b in sorted(profile.right)]
    components = UnionFind(vertices)
    closing: Optional[Tuple[Vertex, Vertex]] = None
    for a, b in sorted(profile.pairs):
        u, v = ("L", a), ("R", b)
        if components[u] == components[v]:
            closing = closing or (u, v)
        else:
            components.union(u, v)

    cycle: Optional[Tuple[Vertex, ...]] = None
    graph = ExtensionGraph(profile.word, profile.left, profile.right, profile.pairs)
    if closing is not None:
        walk = nx.find_cycle(graph.to_networkx(), source=closing[0])
        cycle = tuple(u for u, _ in walk) + (walk[-1][1],)
    count = len(list(components.to_sets()))
    return ExtensionGraph(
        profile.word, profile.left, profile.right, profile.pairs, count, cycle
    )


@dataclass(frozen=True)
class WordClassification:
    """Classification of one word."""

    profile: ExtensionProfile
    graph: ExtensionGraph

    @property
    def word(self) -> Word:
        return self.profile.word

    @property
    def word_class(self) -> WordClass:
        return self.profile.word_class

    @property
    def ordinary(self) -> bool:
        return self.profile.is_ordinary()

    @property
    def acyclic(self) -> bool:
        return self.graph.is_acyclic

    @property
    def tree(self) -> bool:
        return self.graph.is_tree


def classify_word(S: FactorSet, w: Word) -> WordClassification:
    """
    Class by the sign of m(w), ordinary flag, acyclic/tree flags of G(w).

    Raises:
        BiextendabilityError: E(w) is empty below the horizon
    """
    profile = extension_profile(S, w)
    if profile.e == 0:
        raise BiextendabilityError(S.alphabet.render(w))
    return WordClassification(profile, _graph_of(profile))


@dataclass
class SetVerdict:
    """
    Set-level flags for all words up to certified_length.

    Every flag is the conjunction over those words; witnesses holds the first
    word (canonical order) breaking each flag.
    """

    certified_length: int
    flags: Dict[str, bool]
    witnesses: Dict[str, Optional[Word]]
    tallies: Dict[int, Dict[str, int]]
    classifications: List[WordClassification] = field(default_factory=list)
    non_tree: Optional[WordClassification] = None

    def __post_init__(self) -> None:
        implications = (("tree", "acyclic"), ("tree", "neutral"), ("acyclic", "weak"))
        for premise, conclusion in implications:
            if self.flags[premise] and not self.flags[conclusion]:
                raise ValueError(f"inconsistent verdict: {premise} without {conclusion}")

    @property
    def strong(self) -> bool:
        return self.flags["strong"]

    @property
    def weak(self) -> bool:
        return self.flags["weak"]

    @property
    def neutral(self) -> bool:
        return self.flags["neutral"]

    @property
    def acyclic(self) -> bool:
        return self.flags["acyclic"]

    @property
    def tree(self) -> bool:
        return self.flags["tree"]

    def class_name(self) -> str:
        """Most specific class the flags support."""
        for name in ("tree", "acyclic", "neutral", "strong", "weak"):
            if self.flags[name]:
                return name
        return "unclassified"

    def to_json(self, S: FactorSet) -> Dict[str, Any]:
        render = S.alphabet.render
        report: Dict[str, Any] = {
            "certified_length": self.certified_length,
            "flags": dict(self.flags),
            "witnesses": {
                name: None if word is None else render(word)
                for name, word in self.witnesses.items()
            },
            "tallies": {str(n): dict(counts) for n, counts in self.tallies.items()},
            "non_tree_witness": None,
        }
        if self.non_tree is not None:
            cycle = self.non_tree.graph.cycle
            report["non_tree_witness"] = {
                "word": render(self.non_tree.word),
                "components": self.non_tree.graph.components,
                "cycle": None
                if cycle is None
                else [f"{side}:{S.alphabet.symbol(a)}" for side, a in cycle],
            }
        return report


def classify_set(S: FactorSet, up_to: int) -> SetVerdict:
    """Classify every word of length <= up_to."""
    S.require(up_to + 2, "classify_set")
    flags = {name: True for name in SET_FLAGS}
    witnesses: Dict[str, Optional[Word]] = {name: None for name in SET_FLAGS}
    tallies: Dict[int, Dict[str, int]] = {}
    classifications: List[WordClassification] = []
    non_tree: Optional[WordClassification] = None

    for n in range(up_to + 1):
        counts = {c.value: 0 for c in WordClass}
        for w in S.words(n):
            result = classify_word(S, w)
            classifications.append(result)
            counts[result.word_class.value] += 1
            checks = {
                "strong": result.profile.m >= 0,
                "weak": result.profile.m <= 0,
                "neutral": result.profile.m == 0,
                "acyclic": result.acyclic,
                "tree": result.tree,
            }
            for name, ok in checks.items():
                if not ok and flags[name]:
                    flags[name] = False
                    witnesses[name] = w
            if non_tree is None and not result.tree:
                non_tree = result
        tallies[n] = counts
    logger.debug("classified %s up to length %d: %s", S.name, up_to, flags)
    return SetVerdict(up_to, flags, witnesses, tallies, classifications, non_tree)


def bispecial_words(S: FactorSet, up_to: int) -> List[Word]:
    S.require(up_to + 1, "bispecial_words")
    return [
        w
        for w in S.all_words(up_to)
        if len(S.left_extensions(w)) >= 2 and len(S.right_extensions(w)) >= 2
    ]


def right_special_words(S: FactorSet, up_to: int) -> List[Word]:
    S.require(up_to + 1, "right_special_words")
    return [w for w in S.all_words(up_to) if len(S.right_extensions(w)) >= 2]


@dataclass(frozen=True)
class EnumerationIdentities:
    """b_n = Σ m(w) and s_n = Σ (r(w) - 1) over S ∩ A^n."""

    n: int
    b_n: int
    sum_m: int
    s_n: int
    sum_r: int

    @property
    def holds(self) -> bool:
        return self.b_n == self.sum_m and self.s_n == self.sum_r


def check_enumeration_identities(S: FactorSet, n: int) -> EnumerationIdentities:
    S.require(n + 2, "check_enumeration_identities")
    profile = complexity_profile(S)
    sum_m = 0
    sum_r = 0
    for w in S.words(n):
        ext = extension_profile(S, w)
        sum_m += ext.m
        sum_r += ext.r - 1
    return EnumerationIdentities(n, profile.b[n], sum_m, profile.s[n], sum_r)


@dataclass
class ComplexityClassCheck:
    """Complexity bounds implied by a set verdict, with the lengths that break them."""

    k: int
    relation: str  # "=", ">=", "<=" or "none"
    certified_up_to: int
    violations: List[int] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.violations


def check_complexity_class(S: FactorSet, verdict: SetVerdict) -> ComplexityClassCheck:
    """
    Neutral sets have p_n = kn + 1, strong sets p_n >= kn + 1 and weak sets
    p_n <= kn + 1. Words classified up to L pin s_n down to n <= L + 1, hence
    p_n up to L + 2.
    """
    k = S.k
    if verdict.neutral:
        relation = "="
    elif verdict.strong:
        relation = ">="
    elif verdict.weak:
        relation = "<="
    else:
        relation = "none"
    top = min(verdict.certified_length + 2, S.horizon)
    check = ComplexityClassCheck(k, relation, top)
    if relation == "none":
        return check
    profile = complexity_profile(S)
    for n in range(top + 1):
        expected = k * n + 1
        value = profile.p[n]
        ok = {
            "=": value == expected,
            ">=": value >= expected,
            "<=": value <= expected,
        }[relation]
        if not ok:
            check.violations.append(n)
    return check
