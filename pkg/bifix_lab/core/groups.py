"""
Groups - Subgroups of a Free Group through Folded Graphs

A finite set of words generates a subgroup of the free group on the
alphabet. Folding the bouquet of its generators gives a rooted labelled
graph from which index, rank, membership and coset representatives are read
off directly.

Key Responsibilities:
- GroupWord with free reduction, products and inverses
- Folding with both out-side and in-side merges to a fixed point
- Index (or the infinite marker), rank, basis test, membership
- Canonical breadth-first relabelling for comparisons and exports
"""

import logging
import random
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Deque, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from .alphabet import Alphabet, Word
from .codes import BifixCode, in_submonoid
from .errors import GroupError
from .words import FactorSet

logger = logging.getLogger(__name__)

Letter = Tuple[int, int]  # (letter, +1 or -1)
Edge = Tuple[int, int, int]  # (source, letter, target)


class IndexMarker(Enum):
    """Index of a subgroup whose folded graph is not complete."""
    INFINITE = "infinite"


Index = Union[int, IndexMarker]


@dataclass(frozen=True)
class GroupWord:
    """Sequence of signed letters; not reduced unless built by free_reduce."""

    letters: Tuple[Letter, ...] = ()

    def __post_init__(self) -> None:
        for letter, exponent in self.letters:
            if exponent not in (1, -1) or letter < 0:
                raise GroupError(f"bad signed letter ({letter}, {exponent})")

    @classmethod
    def from_word(cls, word: Word) -> "GroupWord":
        return cls(tuple((letter, 1) for letter in word))

    @classmethod
    def parse(cls, alphabet: Alphabet, text: str) -> "GroupWord":
        """
        Whitespace-separated factors, each a word optionally followed by ^-1,
        e.g. "ca aa^-1 ab". The product is returned unreduced.
        """
        letters: List[Letter] = []
        for token in text.split():
            if token.endswith("^-1"):
                letters.extend(cls.from_word(alphabet.parse(token[:-3])).inverse().letters)
            else:
                letters.extend(cls.from_word(alphabet.parse(token)).letters)
        return cls(tuple(letters))

    def inverse(self) -> "GroupWord":
        return GroupWord(tuple((letter, -exp) for letter, exp in reversed(self.letters)))

    def __mul__(self, other: "GroupWord") -> "GroupWord":
        return free_reduce(GroupWord(self.letters + other.letters))

    def __len__(self) -> int:
        return len(self.letters)

    @property
    def is_identity(self) -> bool:
        return not free_reduce(self).letters

    def render(self, alphabet: Alphabet) -> str:
        if not self.letters:
            return "ε"
        return " ".join(
            alphabet.symbol(letter) + ("" if exp == 1 else "^-1")
            for letter, exp in self.letters
        )


def free_reduce(w: GroupWord) -> GroupWord:
    """Cancel adjacent x x^-1 and x^-1 x pairs until none remain."""
    stack: List[Letter] = []
    for letter, exp in w.letters:
        if stack and stack[-1] == (letter, -exp):
            stack.pop()
        else:
            stack.append((letter, exp))
    return GroupWord(tuple(stack))


def as_group_word(x: Union[Word, GroupWord]) -> GroupWord:
    return x if isinstance(x, GroupWord) else GroupWord.from_word(x)


@dataclass(frozen=True)
class SubgroupGraph:
    """
    Rooted graph with letter-labelled directed edges, read in both directions.

    Vertices are 0..vertex_count-1 and the base is 0. `folded` is computed:
    no vertex has two same-label out-edges or two same-label in-edges.
    """

    alphabet: Alphabet
    vertex_count: int
    edges: Tuple[Edge, ...]
    base: int = 0
    folded: bool = field(init=False)
    _out: Dict[Tuple[int, int], int] = field(init=False, repr=False, compare=False, hash=False)
    _in: Dict[Tuple[int, int], int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        out: Dict[Tuple[int, int], int] = {}
        inn: Dict[Tuple[int, int], int] = {}
        folded = True
        for source, letter, target in self.edges:
            if not (0 <= source < self.vertex_count and 0 <= target < self.vertex_count):
                raise GroupError(f"edge {(source, letter, target)} leaves the vertex range")
            if out.setdefault((source, letter), target) != target:
                folded = False
            if inn.setdefault((target, letter), source) != source:
                folded = False
        object.__setattr__(self, "folded", folded)
        object.__setattr__(self, "_out", out)
        object.__setattr__(self, "_in", inn)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def successor(self, vertex: int, letter: Letter) -> Optional[int]:
        symbol, exp = letter
        table = self._out if exp == 1 else self._in
        return table.get((vertex, symbol))

    def is_complete(self) -> bool:
        """Every vertex has one out-edge and one in-edge per letter."""
        return all(
            (v, a) in self._out and (v, a) in self._in
            for v in range(self.vertex_count)
            for a in range(self.alphabet.size)
        )

    def canonical_form(self) -> Tuple[int, Tuple[Edge, ...]]:
        relabel = _bfs_order(self.vertex_count, self.edges, self.base)
        edges = sorted((relabel[s], a, relabel[t]) for s, a, t in self.edges)
        return (self.vertex_count, tuple(edges))

    def to_json(self) -> Dict[str, Any]:
        count, edges = self.canonical_form()
        return {
            "alphabet": list(self.alphabet.letters),
            "vertices": count,
            "base": 0,
            "edges": [[s, self.alphabet.symbol(a), t] for s, a, t in edges],
        }

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> "SubgroupGraph":
        """Inverse of to_json; the base is vertex 0."""
        try:
            alphabet = Alphabet(tuple(data["alphabet"]))
            edges = tuple((int(s), alphabet.index(a), int(t)) for s, a, t in data["edges"])
            return cls(alphabet, int(data["vertices"]), edges)
        except (KeyError, TypeError, ValueError) as exc:
            raise GroupError(f"malformed subgroup graph: {exc}") from exc


def _bfs_order(vertex_count: int, edges: Iterable[Edge], base: int) -> Dict[int, int]:
    """New labels by breadth-first search from base, neighbours in (letter, direction) order."""
    neighbours: Dict[int, List[Tuple[int, int, int]]] = {v: [] for v in range(vertex_count)}
    for source, letter, target in edges:
        neighbours[source].append((letter, 0, target))
        neighbours[target].append((letter, 1, source))
    order: Dict[int, int] = {base: 0}
    queue: Deque[int] = deque([base])
    while queue:
        vertex = queue.popleft()
        for _, _, other in sorted(neighbours[vertex]):
            if other not in order:
                order[other] = len(order)
                queue.append(other)
    for vertex in range(vertex_count):
        order.setdefault(vertex, len(order))
    return order


class _Folder:
    """
    Call-local folding state: union-find over vertices plus one out-table and
    one in-table per representative. Conflicting entries queue merges.
    """

    def __init__(self) -> None:
        self.parent: List[int] = []
        self.out: List[Dict[int, int]] = []
        self.inn: List[Dict[int, int]] = []
        self.pending: List[Tuple[int, int]] = []
        self.merges = 0

    def vertex(self) -> int:
        self.parent.append(len(self.parent))
        self.out.append({})
        self.inn.append({})
        return len(self.parent) - 1

    def find(self, v: int) -> int:
        while self.parent[v] != v:
            self.parent[v] = self.parent[self.parent[v]]
            v = self.parent[v]
        return v

    def add_edge(self, u: int, letter: int, v: int) -> None:
        self._link(u, letter, v)
        self._drain()

    def _link(self, u: int, letter: int, v: int) -> None:
        u, v = self.find(u), self.find(v)
        target = self.out[u].get(letter)
        source = self.inn[v].get(letter)
        if target is None:
            self.out[u][letter] = v
        else:
            self.pending.append((target, v))
        if source is None:
            self.inn[v][letter] = u
        else:
            self.pending.append((source, u))

    def _drain(self) -> None:
        while self.pending:
            x, y = self.pending.pop()
            x, y = self.find(x), self.find(y)
            if x == y:
                continue
            if y < x:
                x, y = y, x
            self.parent[y] = x
            self.merges += 1
            moved_out, moved_in = self.out[y], self.inn[y]
            self.out[y], self.inn[y] = {}, {}
            for letter, target in moved_out.items():
                self._link(x, letter, target)
            for letter, source in moved_in.items():
                self._link(source, letter, x)

    def edges(self) -> List[Edge]:
        found = set()
        for v in range(len(self.parent)):
            if self.find(v) != v:
                continue
            for letter, target in self.out[v].items():
                found.add((v, letter, self.find(target)))
        return sorted(found)


def _prune_core(edges: List[Edge], base: int) -> List[Edge]:
    """Drop non-base vertices of degree one until none is left."""
    while True:
        degree: Dict[int, int] = {}
        for source, _, target in edges:
            degree[source] = degree.get(source, 0) + 1
            degree[target] = degree.get(target, 0) + 1
        hanging = {v for v, d in degree.items() if d <= 1 and v != base}
        if not hanging:
            return edges
        edges = [e for e in edges if e[0] not in hanging and e[2] not in hanging]


def stallings_fold(
    X: Iterable[Union[Word, GroupWord]],
    alphabet: Alphabet,
    rng: Optional[random.Random] = None,
) -> SubgroupGraph:
    """
    Fold the bouquet of the generators of X into the subgroup graph of <X>.

    Args:
        X: positive words or group words
        alphabet: alphabet of the free group
        rng: when given, edges are inserted in a shuffled order

    Raises:
        GroupError: a generator reduces to the identity or uses an unknown letter
    """
    generators = [free_reduce(as_group_word(x)) for x in X]
    folder = _Folder()
    base = folder.vertex()
    bouquet: List[Edge] = []
    for generator in generators:
        if not generator.letters:
            raise GroupError("generators must be nonempty reduced words")
        current = base
        for position, (letter, exp) in enumerate(generator.letters):
            if letter >= alphabet.size:
                raise GroupError(f"letter {letter} outside {alphabet}")
            following = base if position == len(generator) - 1 else folder.vertex()
            bouquet.append((current, letter, following) if exp == 1 else (following, letter, current))
            current = following
    if rng is not None:
        rng.shuffle(bouquet)
    for source, letter, target in bouquet:
        folder.add_edge(source, letter, target)

    core = _prune_core(folder.edges(), folder.find(base))
    vertices = sorted({folder.find(base)} | {e[0] for e in core} | {e[2] for e in core})
    dense = {v: i for i, v in enumerate(vertices)}
    edges = [(dense[s], a, dense[t]) for s, a, t in core]
    relabel = _bfs_order(len(vertices), edges, dense[folder.find(base)])
    logger.debug("folded %d bouquet edges with %d merges into %d vertices",
                 len(bouquet), folder.merges, len(vertices))
    return SubgroupGraph(
        alphabet,
        len(vertices),
        tuple(sorted((relabel[s], a, relabel[t]) for s, a, t in edges)),
    )


def _require_folded(G: SubgroupGraph) -> None:
    if not G.folded:
        raise GroupError("query needs a folded subgroup graph")


def subgroup_index(G: SubgroupGraph) -> Index:
    """Vertex count when the graph is complete, otherwise IndexMarker.INFINITE."""
    _require_folded(G)
    return G.vertex_count if G.is_complete() else IndexMarker.INFINITE


def subgroup_rank(G: SubgroupGraph) -> int:
    _require_folded(G)
    return G.edge_count - G.vertex_count + 1


def _distinct(X: Iterable[Union[Word, GroupWord]]) -> List[GroupWord]:
    seen: Dict[GroupWord, None] = {}
    for x in X:
        seen.setdefault(free_reduce(as_group_word(x)), None)
    return list(seen)


def is_basis(X: Iterable[Union[Word, GroupWord]], alphabet: Alphabet) -> bool:
    """X freely generates <X>: rank of the folded graph equals Card(X)."""
    generators = _distinct(X)
    return subgroup_rank(stallings_fold(generators, alphabet)) == len(generators)


def contains(G: SubgroupGraph, w: Union[Word, GroupWord]) -> bool:
    """The reduced word traces a path from the base back to the base."""
    _require_folded(G)
    vertex = G.base
    for letter in free_reduce(as_group_word(w)).letters:
        following = G.successor(vertex, letter)
        if following is None:
            return False
        vertex = following
    return vertex == G.base


def coset_transversal(G: SubgroupGraph) -> List[GroupWord]:
    """Spanning-tree labels from the base, one per vertex, in BFS order."""
    if subgroup_index(G) is IndexMarker.INFINITE:
        raise GroupError("coset transversal needs a finite index subgroup")
    labels: Dict[int, GroupWord] = {G.base: GroupWord()}
    queue: Deque[int] = deque([G.base])
    while queue:
        vertex = queue.popleft()
        for letter in range(G.alphabet.size):
            for exp in (1, -1):
                other = G.successor(vertex, (letter, exp))
                if other is not None and other not in labels:
                    labels[other] = labels[vertex] * GroupWord(((letter, exp),))
                    queue.append(other)
    return list(labels.values())


def dependency_witness(
    X: Sequence[Union[Word, GroupWord]], alphabet: Alphabet
) -> Optional[Tuple[GroupWord, List[GroupWord]]]:
    """First generator lying in the subgroup generated by the others."""
    generators = _distinct(X)
    for position, x in enumerate(generators):
        others = generators[:position] + generators[position + 1 :]
        if others and contains(stallings_fold(others, alphabet), x):
            return x, others
    return None


@dataclass
class SaturationReport:
    """Words of S in <X> that are not in X*."""

    checked: int
    members: int
    violations: List[Word] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.violations


def check_saturation(S: FactorSet, X: BifixCode, up_to: int) -> SaturationReport:
    """<X> ∩ S = X* ∩ S on all nonempty words of S of length <= up_to."""
    graph = stallings_fold(X.words, S.alphabet)
    report = SaturationReport(0, 0)
    for w in S.all_words(up_to):
        if not w:
            continue
        report.checked += 1
        if contains(graph, w):
            report.members += 1
            if not in_submonoid(X, w):
                report.violations.append(w)
    return report
