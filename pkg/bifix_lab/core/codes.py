"""
Codes - Bifix Codes inside a Factor Set

Everything about a finite set of words X living inside a factor set S:
code predicates, S-maximality, parses and the S-degree, internal factors and
the kernel, the internal transformation at a pivot word, exhaustive search
for S-maximal bifix codes and decoding S through a coding morphism.

Key Responsibilities:
- BifixCode value type with canonical word order
- Parse counting by suffixes and by explicit (v, x, u) triples
- S-degree, kernel and the arity identity over proper prefixes
- Internal transformation with its G/D decomposition
- Backtracking enumeration over the prefix trie of S
- Maximal bifix decoding f^-1(S)
"""

import logging
from dataclasses import dataclass, field
from typing import (
    Any,
    Collection,
    Dict,
    FrozenSet,
    Iterable,
    Iterator,
    List,
    Mapping,
    Optional,
    Sequence,
    Set,
    Tuple,
)

from .alphabet import EMPTY, Alphabet, Word, is_prefix, is_suffix, shortlex, sort_words
from .errors import CodeError, HorizonError, SymbolError
from .words import FactorSet, Morphism, StabilizationCertificate

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CodePredicates:
    """Prefix/suffix code flags with a violating (shorter, longer) pair."""

    prefix: bool
    suffix: bool
    prefix_witness: Optional[Tuple[Word, Word]] = None
    suffix_witness: Optional[Tuple[Word, Word]] = None

    @property
    def bifix(self) -> bool:
        return self.prefix and self.suffix


def code_predicates(X: Iterable[Word]) -> CodePredicates:
    """
    Test whether X is a prefix code, a suffix code, both.

    Raises:
        CodeError: X contains the empty word
    """
    words = sort_words(X)
    if EMPTY in words:
        raise CodeError("a code cannot contain the empty word")
    wordset = set(words)
    prefix_witness = next(
        ((w[:i], w) for w in words for i in range(1, len(w)) if w[:i] in wordset), None
    )
    suffix_witness = next(
        ((w[i:], w) for w in words for i in range(len(w) - 1, 0, -1) if w[i:] in wordset),
        None,
    )
    return CodePredicates(
        prefix_witness is None, suffix_witness is None, prefix_witness, suffix_witness
    )


@dataclass(frozen=True)
class BifixCode:
    """
    Finite bifix code over an alphabet, words kept in canonical order.

    Construction fails with CodeError when the words do not form a bifix code.
    """

    alphabet: Alphabet
    words: Tuple[Word, ...]
    wordset: FrozenSet[Word] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        words = tuple(sort_words(self.words))
        if not words:
            raise CodeError("a bifix code needs at least one word")
        predicates = code_predicates(words)
        if predicates.prefix_witness is not None:
            raise self._violation("prefix", predicates.prefix_witness)
        if predicates.suffix_witness is not None:
            raise self._violation("suffix", predicates.suffix_witness)
        object.__setattr__(self, "words", words)
        object.__setattr__(self, "wordset", frozenset(words))

    def _violation(self, kind: str, pair: Tuple[Word, Word]) -> CodeError:
        shorter, longer = pair
        return CodeError(
            f"not a bifix code: {self.alphabet.render(shorter)} is a proper {kind} "
            f"of {self.alphabet.render(longer)}"
        )

    @classmethod
    def parse(cls, alphabet: Alphabet, text: str) -> "BifixCode":
        return cls(alphabet, tuple(alphabet.parse_many(text)))

    @property
    def max_len(self) -> int:
        return max(len(w) for w in self.words)

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self) -> Iterator[Word]:
        return iter(self.words)

    def __contains__(self, word: object) -> bool:
        return word in self.wordset

    def render(self) -> List[str]:
        return [self.alphabet.render(w) for w in self.words]

    def to_json(self) -> Dict[str, Any]:
        return {
            "alphabet": list(self.alphabet.letters),
            "words": [self.alphabet.to_json_word(w) for w in self.words],
        }

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> "BifixCode":
        alphabet = Alphabet(tuple(data["alphabet"]))
        return cls(alphabet, tuple(alphabet.word(w) for w in data["words"]))

    def sort_key(self) -> Tuple[int, Tuple[Tuple[int, Word], ...]]:
        """Enumeration order: cardinality, then the word list."""
        return (len(self.words), tuple(shortlex(w) for w in self.words))

    def __repr__(self) -> str:
        return "BifixCode{" + " ".join(self.render()) + "}"


def _wordset(X: Collection[Word]) -> FrozenSet[Word]:
    return X.wordset if isinstance(X, BifixCode) else frozenset(X)


def _has_prefix_in(word: Word, xs: FrozenSet[Word]) -> bool:
    return any(word[:i] in xs for i in range(1, len(word) + 1))


def _has_suffix_in(word: Word, xs: FrozenSet[Word]) -> bool:
    return any(word[i:] in xs for i in range(len(word)))


def in_submonoid(X: Collection[Word], w: Word) -> bool:
    """Membership of w in X*."""
    xs = _wordset(X)
    lengths = sorted({len(x) for x in xs})
    reachable = [False] * (len(w) + 1)
    reachable[0] = True
    for i in range(len(w)):
        if not reachable[i]:
            continue
        for n in lengths:
            if i + n <= len(w) and w[i : i + n] in xs:
                reachable[i + n] = True
    return reachable[len(w)]


@dataclass(frozen=True)
class MaximalityReport:
    """Outcome of the S-maximality test; witness has no prefix in X."""

    maximal: bool
    witness: Optional[Word] = None


def is_s_maximal(X: BifixCode, S: FactorSet) -> MaximalityReport:
    """
    Every word of S of length max_len(X) must have a prefix in X.

    Raises:
        HorizonError: N < 2 * max_len(X)
        CodeError: X is not contained in S
    """
    S.require(2 * X.max_len, "is_s_maximal")
    outside = [w for w in X if w not in S]
    if outside:
        raise CodeError(f"{X.alphabet.render(outside[0])} is not in {S.name or 'the set'}")
    for u in S.words(X.max_len):
        if not _has_prefix_in(u, X.wordset):
            return MaximalityReport(False, u)
    return MaximalityReport(True)


@dataclass(frozen=True)
class Parse:
    """w = v x u with v suffix-free and u prefix-free for X, x in X*."""

    v: Word
    x: Word
    u: Word

    def render(self, alphabet: Alphabet) -> str:
        return f"({alphabet.render(self.v)}, {alphabet.render(self.x)}, {alphabet.render(self.u)})"


def parse_count(X: Collection[Word], w: Word) -> int:
    """δ_X(w): suffixes of w without a prefix in X."""
    xs = _wordset(X)
    return sum(1 for i in range(len(w) + 1) if not _has_prefix_in(w[i:], xs))


def parses(X: Collection[Word], w: Word) -> List[Parse]:
    """All parses of w, ordered by the split positions."""
    xs = _wordset(X)
    found: List[Parse] = []
    for i in range(len(w) + 1):
        v = w[:i]
        if _has_suffix_in(v, xs):
            continue
        for j in range(i, len(w) + 1):
            u = w[j:]
            if _has_prefix_in(u, xs):
                continue
            if in_submonoid(xs, w[i:j]):
                found.append(Parse(v, w[i:j], u))
    return found


def s_degree(X: BifixCode, S: FactorSet) -> int:
    """
    Number of parses of a word of S of length max_len(X); such a word is
    never an internal factor, so all of them must agree.

    Raises:
        CodeError: candidates disagree (X not S-maximal, or horizon too short)
    """
    S.require(X.max_len + 1, "s_degree")
    counts = {parse_count(X, u) for u in S.words(X.max_len)}
    if len(counts) != 1:
        raise CodeError(
            f"parse counts {sorted(counts)} disagree on words of length {X.max_len}"
        )
    return counts.pop()


def internal_factors(X: Collection[Word]) -> Set[Word]:
    """Words w with u w v in X for nonempty u, v."""
    return {x[i:j] for x in X for i in range(1, len(x)) for j in range(i, len(x))}


def kernel(X: BifixCode) -> List[Word]:
    inner = internal_factors(X.words)
    return [x for x in X.words if x in inner]


def proper_prefixes(X: Collection[Word]) -> Set[Word]:
    return {x[:i] for x in X for i in range(len(x))}


def arity_sum(X: BifixCode, S: FactorSet) -> int:
    """Σ (r(p) - 1) over the proper prefixes p of X."""
    S.require(X.max_len, "arity_sum")
    return sum(len(S.right_extensions(p)) - 1 for p in proper_prefixes(X.words))


def uniform_code(S: FactorSet, n: int) -> BifixCode:
    """S ∩ A^n."""
    return BifixCode(S.alphabet, tuple(S.words(n)))


def is_admissible_kernel(Y: Collection[Word], S: FactorSet, degree: int) -> bool:
    """δ_Y(y) <= d - 1 for every y in Y, and Y is not S-maximal."""
    words = list(Y)
    if any(parse_count(words, y) > degree - 1 for y in words):
        return False
    if not words:
        return True
    return not is_s_maximal(BifixCode(S.alphabet, tuple(words)), S).maximal


@dataclass(frozen=True)
class TransformParts:
    """G = X w^-1, D = w^-1 X and their splits at a pivot w."""

    pivot: Word
    G: FrozenSet[Word]
    D: FrozenSet[Word]
    G0: FrozenSet[Word]
    D0: FrozenSet[Word]

    @property
    def G1(self) -> FrozenSet[Word]:
        return self.G - self.G0

    @property
    def D1(self) -> FrozenSet[Word]:
        return self.D - self.D0

    @property
    def removed(self) -> FrozenSet[Word]:
        """G w ∪ w D."""
        w = self.pivot
        return frozenset([g + w for g in self.G] + [w + d for d in self.D])

    @property
    def overlapping(self) -> bool:
        """G w and w D share a word."""
        w = self.pivot
        return bool({g + w for g in self.G} & {w + d for d in self.D})


def transformation_parts(X: Collection[Word], w: Word) -> TransformParts:
    xs = _wordset(X)
    n = len(w)
    G = frozenset(x[: len(x) - n] for x in xs if is_suffix(w, x))
    D = frozenset(x[n:] for x in xs if is_prefix(w, x))
    G0 = frozenset(y[: len(y) - n] for y in (w + d for d in D) if is_suffix(w, y))
    D0 = frozenset(y[n:] for y in (g + w for g in G) if is_prefix(w, y))
    return TransformParts(w, G, D, G0, D0)


def _boundary_words(S: FactorSet, parts: TransformParts) -> Set[Word]:
    """G1 w D0* D1 ∩ S, refusing to read past the horizon."""
    w = parts.pivot

    def member(word: Word) -> bool:
        if len(word) > S.horizon:
            raise HorizonError("internal_transformation", len(word), S.horizon)
        return word in S

    frontier = {g + w for g in parts.G1 if member(g + w)}
    seen = set(frontier)
    result: Set[Word] = set()
    while frontier:
        grown: Set[Word] = set()
        for prefix in sorted(frontier, key=shortlex):
            result.update(prefix + d for d in parts.D1 if member(prefix + d))
            for d in parts.D0:
                candidate = prefix + d
                if candidate not in seen and member(candidate):
                    seen.add(candidate)
                    grown.add(candidate)
        frontier = grown
    return result


def internal_transformation(X: BifixCode, S: FactorSet, w: Word) -> BifixCode:
    """
    Y = (X ∪ w ∪ (G1 w D0* D1 ∩ S)) \\ (G w ∪ w D).

    The result is checked to be an S-maximal bifix code whose S-degree does
    not exceed that of X.

    Raises:
        CodeError: w empty or outside S, X not S-maximal, G1 or D1 empty,
            or the result fails a check
        HorizonError: the boundary expansion reaches the horizon
    """
    render = X.alphabet.render
    if not w or w not in S:
        raise CodeError(f"pivot {render(w)} must be a nonempty word of S")
    maximality = is_s_maximal(X, S)
    if not maximality.maximal:
        raise CodeError(f"{X} is not S-maximal (no prefix for {render(maximality.witness or ())})")
    parts = transformation_parts(X, w)
    if not parts.G1 or not parts.D1:
        raise CodeError(f"G1 and D1 must be nonempty for pivot {render(w)}")

    words = (set(X.words) | {w} | _boundary_words(S, parts)) - parts.removed
    Y = BifixCode(X.alphabet, tuple(words))
    if not is_s_maximal(Y, S).maximal:
        raise CodeError(f"transformed code {Y} is not S-maximal")
    degree = s_degree(X, S)
    observed = s_degree(Y, S)
    if observed > degree:
        raise CodeError(f"transformed code has S-degree {observed} > {degree}")
    logger.debug("pivot %s: %d -> %d words, degree %d -> %d",
                 render(w), len(X), len(Y), degree, observed)
    return Y


class _BifixSearch:
    """
    Backtracking over the prefix trie of S in breadth-first order.

    Each trie node is either a codeword or a proper prefix. A node may become
    a proper prefix only while it has at most d suffixes among proper
    prefixes; every word of length max_len must end with exactly d parses.
    """

    def __init__(self, S: FactorSet, degree: int, max_len: int) -> None:
        self.S = S
        self.degree = degree
        self.max_len = max_len
        self.top_words = S.words(max_len)
        self.prefixes: Set[Word] = set()
        self.code: List[Word] = []
        self.code_set: Set[Word] = set()
        self.pending: List[Word] = [EMPTY]
        self.found: List[Tuple[Word, ...]] = []

    def run(self) -> List[Tuple[Word, ...]]:
        self._visit(0)
        return self.found

    def _suffixes_in_prefixes(self, word: Word, shorter_than: int) -> int:
        start = max(0, len(word) - shorter_than + 1)
        return sum(1 for i in range(start, len(word) + 1) if word[i:] in self.prefixes)

    def _feasible(self, level: int) -> bool:
        """All nodes shorter than level are decided; bound the parse counts."""
        for u in self.top_words:
            decided = self._suffixes_in_prefixes(u, level)
            if decided > self.degree:
                return False
            open_slots = sum(
                1
                for i in range(len(u) - self.max_len + 1, len(u) - level + 1)
                if u[i : i + level - 1] in self.prefixes
            )
            if decided + open_slots < self.degree:
                return False
        return True

    def _exact(self) -> bool:
        return all(
            self._suffixes_in_prefixes(u, self.max_len + 1) == self.degree
            for u in self.top_words
        )

    def _visit(self, position: int) -> None:
        if position == len(self.pending):
            if self._exact():
                self.found.append(tuple(self.code))
            return
        node = self.pending[position]
        if position > 0 and len(node) > len(self.pending[position - 1]):
            if not self._feasible(len(node)):
                return

        if node and not any(node[i:] in self.code_set for i in range(1, len(node))):
            self.code.append(node)
            self.code_set.add(node)
            self._visit(position + 1)
            self.code_set.discard(node)
            self.code.pop()

        if len(node) < self.max_len and self._suffixes_in_prefixes(node, len(node)) < self.degree:
            size = len(self.pending)
            self.prefixes.add(node)
            self.pending.extend(node + (a,) for a in self.S.right_extensions(node))
            self._visit(position + 1)
            del self.pending[size:]
            self.prefixes.discard(node)


def enumerate_s_maximal_bifix(S: FactorSet, degree: int, max_len: int) -> List[BifixCode]:
    """
    All S-maximal bifix codes of S-degree exactly `degree` with words of
    length <= max_len, sorted by (cardinality, word list).

    Raises:
        HorizonError: N < 2 * max_len
    """
    S.require(2 * max_len, "enumerate_s_maximal_bifix")
    if degree < 1:
        raise CodeError("S-degree must be at least 1")
    codes: List[BifixCode] = []
    for words in _BifixSearch(S, degree, max_len).run():
        code = BifixCode(S.alphabet, words)
        if s_degree(code, S) != degree:
            logger.warning("dropping %r: degree check disagrees with search", code)
            continue
        if not is_admissible_kernel(kernel(code), S, degree):
            logger.warning("dropping %r: kernel not admissible for degree %d", code, degree)
            continue
        codes.append(code)
    codes.sort(key=BifixCode.sort_key)
    logger.debug("%d codes of degree %d up to length %d in %s",
                 len(codes), degree, max_len, S.name)
    return codes


@dataclass(frozen=True)
class CodingMorphism:
    """Bijection from a fresh alphabet B onto the words of a code."""

    code: BifixCode
    morphism: Morphism

    @property
    def alphabet(self) -> Alphabet:
        return self.morphism.source

    def encode(self, u: Word) -> Word:
        return self.morphism.apply(u)


def coding_morphism(
    X: BifixCode,
    letters: Optional[Sequence[str]] = None,
    order: Optional[Sequence[Word]] = None,
) -> CodingMorphism:
    """
    Coding morphism for X.

    Args:
        X: the code
        letters: names for B, default x0, x1, ...
        order: codewords matching `letters` one to one, default canonical order
    """
    images = tuple(order) if order is not None else X.words
    if len(images) != len(X) or set(images) != X.wordset:
        raise CodeError("coding order must list every codeword exactly once")
    names = tuple(letters) if letters is not None else tuple(f"x{i}" for i in range(len(X)))
    if len(names) != len(images):
        raise CodeError(f"{len(names)} letters for {len(images)} codewords")
    try:
        source = Alphabet(names)
    except SymbolError as exc:
        raise CodeError(str(exc)) from exc
    return CodingMorphism(X, Morphism(source, X.alphabet, images))


def bifix_decode(S: FactorSet, coding: CodingMorphism, horizon: int, name: str = "") -> FactorSet:
    """
    {u in B* : |u| <= M, f(u) in S}.

    Raises:
        HorizonError: N < M * max_len(X) + max_len(X)
        CodeError: X is not S-maximal
    """
    X = coding.code
    S.require(horizon * X.max_len + X.max_len, "bifix_decode")
    if not is_s_maximal(X, S).maximal:
        raise CodeError(f"{X} is not S-maximal")
    images = coding.morphism.images
    layers: List[Dict[Word, Word]] = [{EMPTY: EMPTY}]
    for _ in range(horizon):
        layer: Dict[Word, Word] = {}
        for u, encoded in layers[-1].items():
            for b, image in enumerate(images):
                candidate = encoded + image
                if candidate in S:
                    layer[u + (b,)] = candidate
        layers.append(layer)
    return FactorSet(
        coding.alphabet,
        horizon,
        tuple(frozenset(layer) for layer in layers),
        StabilizationCertificate("decoding", horizon=horizon),
        name,
    )
