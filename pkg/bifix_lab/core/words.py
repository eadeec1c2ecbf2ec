"""
Words - Morphisms, Fixpoints and Factor Sets

Generates the languages the rest of the package works on: factor sets of
fixpoints of morphisms (optionally pushed through a second morphism) and
factor sets of explicit finite word lists, always truncated at a horizon N.

Key Responsibilities:
- Build and validate morphisms, test primitivity
- Iterate a prolongable morphism and certify when factors stop changing
- Store S ∩ A^n for n <= N with a trie of right extensions
- Complexity sequences p_n, s_n, b_n
- First right return words found by scanning a fixpoint prefix
"""

import logging
from dataclasses import dataclass, field
from itertools import chain
from typing import (
    Any,
    Dict,
    FrozenSet,
    Iterable,
    Iterator,
    List,
    Mapping,
    Optional,
    Sequence,
    Tuple,
    Union,
)

import numpy as np

from .alphabet import (
    EMPTY,
    Alphabet,
    Word,
    factors_of_length,
    has_factor,
    occurrences,
    shortlex,
    sort_words,
)
from .errors import (
    HorizonError,
    MorphismError,
    ReturnWordsError,
    StabilizationError,
    SymbolError,
)

logger = logging.getLogger(__name__)

MAX_ITERATIONS = 64
MAX_PREFIX_LENGTH = 5_000_000

ImageSpec = Union[str, Sequence[str]]


@dataclass(frozen=True)
class Morphism:
    """Letter to word map between two alphabets."""

    source: Alphabet
    target: Alphabet
    images: Tuple[Word, ...]

    def __post_init__(self) -> None:
        if len(self.images) != self.source.size:
            raise MorphismError(
                f"{len(self.images)} images for {self.source.size} source letters"
            )
        for image in self.images:
            if any(not 0 <= letter < self.target.size for letter in image):
                raise MorphismError(f"image {image} uses a letter outside {self.target}")

    @property
    def nonerasing(self) -> bool:
        return all(self.images)

    @property
    def is_endomorphism(self) -> bool:
        return self.source == self.target

    def is_prolongable(self, letter: int) -> bool:
        """image(a) starts with a and is at least two letters long."""
        image = self.images[letter]
        return self.is_endomorphism and len(image) >= 2 and image[0] == letter

    @property
    def prolongable_letters(self) -> Tuple[int, ...]:
        return tuple(a for a in range(self.source.size) if self.is_prolongable(a))

    def apply(self, word: Word) -> Word:
        return tuple(chain.from_iterable(self.images[letter] for letter in word))

    def to_json(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "alphabet": list(self.source.letters),
            "rules": {
                self.source.symbol(a): self.target.to_json_word(image)
                for a, image in enumerate(self.images)
            },
        }
        if self.target != self.source:
            data["target_alphabet"] = list(self.target.letters)
        return data

    def __repr__(self) -> str:
        rules = ", ".join(
            f"{self.source.symbol(a)}->{self.target.render(image)}"
            for a, image in enumerate(self.images)
        )
        return f"Morphism({rules})"


def build_morphism(
    rules: Sequence[Tuple[str, ImageSpec]],
    source: Optional[Alphabet] = None,
    target: Optional[Alphabet] = None,
) -> Morphism:
    """
    Build a morphism from (letter, image) rules.

    Args:
        rules: one rule per source letter; an image is a list of symbol names
            or, for single-character target alphabets, a compact string
        source: source alphabet, defaults to the rule letters in rule order
        target: target alphabet, defaults to the source alphabet

    Returns:
        Morphism with its nonerasing/prolongable metadata available as properties
    """
    letters = [letter for letter, _ in rules]
    seen = set()
    for letter in letters:
        if letter in seen:
            raise MorphismError(f"duplicate rule for letter {letter!r}")
        seen.add(letter)
    try:
        source = source if source is not None else Alphabet(tuple(letters))
    except SymbolError as exc:
        raise MorphismError(str(exc)) from exc
    target = target if target is not None else source

    missing = [name for name in source.letters if name not in seen]
    if missing:
        raise MorphismError(f"no rule for letters {missing}")

    images: List[Word] = [EMPTY] * source.size
    for letter, image in rules:
        try:
            position = source.index(letter)
            images[position] = (
                target.parse(image) if isinstance(image, str) else target.word(image)
            )
        except SymbolError as exc:
            raise MorphismError(f"rule for {letter!r}: {exc}") from exc
    return Morphism(source, target, tuple(images))


def _symbol_list(data: Mapping[str, Any], key: str) -> Tuple[str, ...]:
    value = data[key]
    if not isinstance(value, list) or not all(isinstance(s, str) for s in value):
        raise MorphismError(f"morphism spec: {key!r} must be a list of symbols")
    return tuple(value)


def _image(letter: str, image: Any) -> ImageSpec:
    if isinstance(image, str):
        return image
    if isinstance(image, list) and all(isinstance(s, str) for s in image):
        return tuple(image)
    raise MorphismError(
        f"morphism spec: image of {letter!r} in 'rules' must be a string or a list of symbols"
    )


def morphism_from_json(data: Mapping[str, Any], default: Optional[Alphabet] = None) -> Morphism:
    """Morphism from the JSON rule form {"alphabet", "target_alphabet"?, "rules"}."""
    if not isinstance(data, Mapping) or "rules" not in data:
        raise MorphismError("morphism spec needs a 'rules' object")
    rules = data["rules"]
    if not isinstance(rules, Mapping) or not all(isinstance(k, str) for k in rules):
        raise MorphismError("morphism spec: 'rules' must map symbols to images")
    checked = [(letter, _image(letter, image)) for letter, image in rules.items()]
    try:
        if "alphabet" in data:
            source = Alphabet(_symbol_list(data, "alphabet"))
        elif default is not None:
            source = default
        else:
            source = Alphabet(tuple(rules))
        target = source
        if "target_alphabet" in data:
            target = Alphabet(_symbol_list(data, "target_alphabet"))
    except SymbolError as exc:
        raise MorphismError(str(exc)) from exc
    return build_morphism(checked, source, target)


def incidence_matrix(m: Morphism) -> np.ndarray:
    """Boolean matrix with M[i, j] true iff letter j occurs in image(i)."""
    matrix = np.zeros((m.source.size, m.target.size), dtype=bool)
    for i, image in enumerate(m.images):
        matrix[i, list(set(image))] = True
    return matrix


def _boolean_product(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    return (x.astype(np.int64) @ y.astype(np.int64)) > 0


def is_primitive(m: Morphism) -> bool:
    """
    Primitivity through the Wielandt bound.

    A nonnegative n x n matrix is primitive iff its power n^2 - 2n + 2 is
    positive, so one binary exponentiation decides it.
    """
    if not m.is_endomorphism:
        raise MorphismError("primitivity needs source and target alphabets to agree")
    n = m.source.size
    exponent = n * n - 2 * n + 2
    base = incidence_matrix(m)
    result: Optional[np.ndarray] = None
    while exponent:
        if exponent & 1:
            result = base if result is None else _boolean_product(result, base)
        base = _boolean_product(base, base)
        exponent >>= 1
    return result is not None and bool(result.all())


def _seed_letter(m: Morphism, seed: Union[int, str]) -> int:
    return m.source.index(seed) if isinstance(seed, str) else seed


def fixpoint_prefix(m: Morphism, seed: Union[int, str], min_len: int) -> Word:
    """
    Return f^k(seed) for the smallest k with |f^k(seed)| >= min_len.

    Raises:
        MorphismError: seed not prolongable or the word stops growing / overflows
    """
    letter = _seed_letter(m, seed)
    if not m.is_prolongable(letter):
        raise MorphismError(f"{m} is not prolongable on {m.source.symbol(letter)!r}")
    word: Word = (letter,)
    for _ in range(MAX_ITERATIONS + 1):
        if len(word) >= min_len:
            return word
        grown = m.apply(word)
        if len(grown) > MAX_PREFIX_LENGTH:
            raise MorphismError(f"fixpoint prefix exceeded {MAX_PREFIX_LENGTH} letters")
        word = grown
    raise MorphismError(f"fixpoint prefix did not reach length {min_len}")


@dataclass(frozen=True)
class StabilizationCertificate:
    """Evidence that a stored factor set is exhaustive up to its horizon."""

    source: str  # "fixpoint", "words" or "decoding"
    iterations: int = 0
    prefix_length: int = 0
    horizon: int = 0

    def to_json(self) -> Dict[str, Any]:
        return {
            "source": self.source,
            "iterations": self.iterations,
            "prefix_length": self.prefix_length,
            "horizon": self.horizon,
        }


def _layers_from_top(top: Iterable[Word], horizon: int) -> Tuple[FrozenSet[Word], ...]:
    """Close the factors of length N under prefixes and suffixes."""
    layers: List[FrozenSet[Word]] = [frozenset()] * (horizon + 1)
    current = frozenset(top)
    for n in range(horizon, -1, -1):
        layers[n] = current
        current = frozenset(chain((w[:-1] for w in current), (w[1:] for w in current)))
    return tuple(layers)


@dataclass(frozen=True)
class FactorSet:
    """
    Factorial set of words truncated at a horizon.

    layers[n] holds S ∩ A^n. The trie maps each stored word shorter than the
    horizon to the letters extending it on the right.
    """

    alphabet: Alphabet
    horizon: int
    layers: Tuple[FrozenSet[Word], ...]
    certificate: Optional[StabilizationCertificate] = None
    name: str = ""
    trie: Dict[Word, Tuple[int, ...]] = field(
        init=False, repr=False, compare=False, hash=False
    )

    def __post_init__(self) -> None:
        if self.horizon < 0 or len(self.layers) != self.horizon + 1:
            raise ValueError(
                f"{len(self.layers)} layers do not match horizon {self.horizon}"
            )
        trie: Dict[Word, List[int]] = {}
        for n in range(self.horizon):
            for word in self.layers[n + 1]:
                trie.setdefault(word[:-1], []).append(word[-1])
        object.__setattr__(
            self, "trie", {word: tuple(sorted(ext)) for word, ext in trie.items()}
        )

    def __contains__(self, word: object) -> bool:
        if not isinstance(word, tuple):
            return False
        return len(word) <= self.horizon and word in self.layers[len(word)]

    def require(self, length: int, operation: str) -> None:
        """Refuse operations that would read past the horizon."""
        if length > self.horizon:
            raise HorizonError(operation, length, self.horizon)

    def words(self, n: int) -> List[Word]:
        """S ∩ A^n in canonical order."""
        self.require(n, "words")
        return sorted(self.layers[n])

    def all_words(self, up_to: Optional[int] = None) -> Iterator[Word]:
        top = self.horizon if up_to is None else up_to
        self.require(top, "all_words")
        for n in range(top + 1):
            yield from sorted(self.layers[n])

    def count(self, n: int) -> int:
        self.require(n, "count")
        return len(self.layers[n])

    def right_extensions(self, word: Word) -> Tuple[int, ...]:
        self.require(len(word) + 1, "right_extensions")
        return self.trie.get(word, ())

    def left_extensions(self, word: Word) -> Tuple[int, ...]:
        self.require(len(word) + 1, "left_extensions")
        layer = self.layers[len(word) + 1]
        return tuple(a for a in range(self.alphabet.size) if (a,) + word in layer)

    def letters(self) -> Tuple[int, ...]:
        """Letters occurring in S."""
        if self.horizon == 0:
            return ()
        return tuple(sorted(w[0] for w in self.layers[1]))

    @property
    def k(self) -> int:
        """Card(S ∩ A) - 1."""
        return len(self.letters()) - 1

    @property
    def size(self) -> int:
        return sum(len(layer) for layer in self.layers)

    def is_factorial(self) -> bool:
        for n in range(1, self.horizon + 1):
            for word in self.layers[n]:
                if word[:-1] not in self.layers[n - 1] or word[1:] not in self.layers[n - 1]:
                    return False
        return EMPTY in self.layers[0] or self.size == 0

    def truncate(self, horizon: int) -> "FactorSet":
        self.require(horizon, "truncate")
        return FactorSet(
            self.alphabet, horizon, self.layers[: horizon + 1], self.certificate, self.name
        )

    def render_words(self, n: int) -> List[str]:
        return [self.alphabet.render(w) for w in self.words(n)]

    def to_json(self) -> Dict[str, Any]:
        """Export: sorted word list per length."""
        return {
            "name": self.name,
            "alphabet": list(self.alphabet.letters),
            "horizon": self.horizon,
            "certificate": None if self.certificate is None else self.certificate.to_json(),
            "words": {
                str(n): [self.alphabet.to_json_word(w) for w in sorted(self.layers[n])]
                for n in range(self.horizon + 1)
            },
        }

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> "FactorSet":
        alphabet = Alphabet(tuple(data["alphabet"]))
        horizon = int(data["horizon"])
        layers = tuple(
            frozenset(alphabet.word(w) for w in data["words"].get(str(n), []))
            for n in range(horizon + 1)
        )
        certificate = None
        if data.get("certificate"):
            certificate = StabilizationCertificate(**data["certificate"])
        return cls(alphabet, horizon, layers, certificate, data.get("name", ""))

    def __repr__(self) -> str:
        label = f"{self.name}, " if self.name else ""
        return f"FactorSet({label}alphabet={self.alphabet}, horizon={self.horizon})"


def factor_set_of_words(
    alphabet: Alphabet, words: Iterable[Word], horizon: int, name: str = ""
) -> FactorSet:
    """All factors of length <= horizon of the given words."""
    layers: List[set] = [set() for _ in range(horizon + 1)]
    for word in words:
        for n in range(min(len(word), horizon) + 1):
            layers[n].update(factors_of_length(word, n))
    return FactorSet(
        alphabet,
        horizon,
        tuple(frozenset(layer) for layer in layers),
        StabilizationCertificate("words", horizon=horizon),
        name,
    )


def factor_set_of_fixpoint(
    m: Morphism,
    seed: Union[int, str],
    post_image: Optional[Morphism],
    horizon: int,
    name: str = "",
) -> FactorSet:
    """
    Factors of length <= horizon of f^ω(seed), or of post_image(f^ω(seed)).

    Iterates f until the length-N factors of two consecutive iterates agree
    (both before and after the post-image) and the iterate has at least 4N
    letters. The iteration count and prefix length go into the certificate.
    """
    letter = _seed_letter(m, seed)
    if not m.is_prolongable(letter):
        raise MorphismError(f"{m} is not prolongable on {m.source.symbol(letter)!r}")
    if post_image is not None:
        if not post_image.nonerasing:
            raise MorphismError("post-image morphism must be nonerasing")
        if post_image.source != m.target:
            raise MorphismError("post-image source alphabet differs from the fixpoint's")
    alphabet = post_image.target if post_image is not None else m.target

    word: Word = (letter,)
    previous: Optional[Tuple[FrozenSet[Word], FrozenSet[Word]]] = None
    for iteration in range(MAX_ITERATIONS):
        image = post_image.apply(word) if post_image is not None else word
        if len(word) >= horizon:
            source_top = frozenset(factors_of_length(word, horizon))
            image_top = (
                frozenset(factors_of_length(image, horizon))
                if post_image is not None
                else source_top
            )
            current = (source_top, image_top)
            logger.debug(
                "iterate %d: %d letters, %d factors of length %d",
                iteration,
                len(word),
                len(image_top),
                horizon,
            )
            if current == previous and len(word) >= 4 * horizon:
                certificate = StabilizationCertificate(
                    "fixpoint", iteration, len(image), horizon
                )
                return FactorSet(
                    alphabet, horizon, _layers_from_top(image_top, horizon), certificate, name
                )
            previous = current
        word = m.apply(word)
        if len(word) > MAX_PREFIX_LENGTH:
            break
    raise StabilizationError(
        f"factors of length {horizon} did not stabilise within {MAX_ITERATIONS} iterations"
    )


@dataclass(frozen=True)
class ComplexityProfile:
    """p_n, s_n = p_{n+1} - p_n and b_n = s_{n+1} - s_n up to the horizon."""

    p: Tuple[int, ...]
    s: Tuple[int, ...]
    b: Tuple[int, ...]

    @property
    def horizon(self) -> int:
        return len(self.p) - 1

    def linear_defect(self, slope: int, intercept: int = 1) -> Optional[int]:
        """First n with p_n != slope*n + intercept, or None."""
        for n, value in enumerate(self.p):
            if value != slope * n + intercept:
                return n
        return None

    def to_json(self) -> Dict[str, Any]:
        return {"p": list(self.p), "s": list(self.s), "b": list(self.b)}


def complexity_profile(S: FactorSet) -> ComplexityProfile:
    p = np.array([len(layer) for layer in S.layers], dtype=np.int64)
    s = np.diff(p)
    b = np.diff(p, n=2)
    return ComplexityProfile(
        tuple(int(x) for x in p), tuple(int(x) for x in s), tuple(int(x) for x in b)
    )


def is_biextendable(S: FactorSet) -> Optional[Word]:
    """First word shorter than the horizon with no left or no right extension."""
    for word in S.all_words(S.horizon - 1) if S.horizon > 0 else ():
        if not S.right_extensions(word) or not S.left_extensions(word):
            return word
    return None


@dataclass(frozen=True)
class ReturnWords:
    """First right return words to a word, with the scan evidence."""

    word: Word
    returns: Tuple[Word, ...]
    complete: bool
    scan_len: int
    occurrences: int

    def __len__(self) -> int:
        return len(self.returns)


def fixpoint_image_prefix(
    m: Morphism, seed: Union[int, str], post_image: Optional[Morphism], length: int
) -> Word:
    """Exactly `length` letters of f^ω(seed), pushed through post_image if given."""
    source = fixpoint_prefix(m, seed, length)
    image = post_image.apply(source) if post_image is not None else source
    return image[:length]


def _scan_returns(text: Word, w: Word) -> Tuple[FrozenSet[Word], int]:
    positions = list(occurrences(text, w))
    if not positions:
        raise ReturnWordsError("word does not occur in the scanned prefix")
    if len(positions) < 2:
        raise ReturnWordsError("word occurs only once in the scanned prefix")
    n = len(w)
    returns = frozenset(text[i + n : j + n] for i, j in zip(positions, positions[1:]))
    return returns, len(positions)


def return_words(
    m: Morphism,
    seed: Union[int, str],
    post_image: Optional[Morphism],
    w: Word,
    scan_len: int,
) -> ReturnWords:
    """
    First right return words to w.

    Scans consecutive occurrences of w in a prefix of length scan_len; the set
    counts as complete when doubling the scan finds nothing new.
    """
    if not w:
        raise ReturnWordsError("return words are only computed for nonempty words")
    short, count = _scan_returns(fixpoint_image_prefix(m, seed, post_image, scan_len), w)
    long, _ = _scan_returns(fixpoint_image_prefix(m, seed, post_image, 2 * scan_len), w)
    logger.debug("%d return words after %d occurrences", len(short), count)
    return ReturnWords(w, tuple(sorted(short, key=shortlex)), short == long, scan_len, count)


def uniform_recurrence_report(S: FactorSet, up_to: int) -> Dict[Word, Optional[int]]:
    """
    For each u with |u| <= up_to, the least n <= N such that u is a factor of
    every word of S ∩ A^n; None when no such n exists below the horizon. An
    empty S ∩ A^n is not a witness.
    """
    if up_to >= S.horizon:
        raise HorizonError("uniform_recurrence_report", up_to + 1, S.horizon)
    report: Dict[Word, Optional[int]] = {}
    for u in S.all_words(up_to):
        report[u] = next(
            (
                n
                for n in range(len(u), S.horizon + 1)
                if S.layers[n] and all(has_factor(v, u) for v in S.layers[n])
            ),
            None,
        )
    return report


@dataclass(frozen=True)
class FixpointSpec:
    """A morphism with its seed and optional post-image: one infinite word."""

    morphism: Morphism
    seed: int
    post_image: Optional[Morphism] = None
    name: str = ""

    def __post_init__(self) -> None:
        if not self.morphism.is_prolongable(self.seed):
            raise MorphismError(
                f"{self.morphism} is not prolongable on "
                f"{self.morphism.source.symbol(self.seed)!r}"
            )

    @property
    def alphabet(self) -> Alphabet:
        return self.post_image.target if self.post_image is not None else self.morphism.target

    def factor_set(self, horizon: int) -> FactorSet:
        return factor_set_of_fixpoint(
            self.morphism, self.seed, self.post_image, horizon, self.name
        )

    def prefix(self, length: int) -> Word:
        return fixpoint_image_prefix(self.morphism, self.seed, self.post_image, length)

    def return_words(self, w: Word, scan_len: int) -> ReturnWords:
        return return_words(self.morphism, self.seed, self.post_image, w, scan_len)

    def to_json(self) -> Dict[str, Any]:
        data = self.morphism.to_json()
        data["seed"] = self.morphism.source.symbol(self.seed)
        if self.name:
            data["name"] = self.name
        if self.post_image is not None:
            data["post_image"] = self.post_image.to_json()
        return data

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> "FixpointSpec":
        """
        Parse the JSON morphism spec.

        {"alphabet": [...], "rules": {...}, "seed": "a", "post_image": {...}}
        """
        morphism = morphism_from_json(data)
        if not isinstance(data.get("seed"), str):
            raise MorphismError("morphism spec needs a 'seed' symbol")
        if not isinstance(data.get("name", ""), str):
            raise MorphismError("morphism spec: 'name' must be a string")
        try:
            seed = morphism.source.index(data["seed"])
        except SymbolError as exc:
            raise MorphismError(str(exc)) from exc
        post = None
        if data.get("post_image") is not None:
            post = morphism_from_json(data["post_image"], default=morphism.target)
        return cls(morphism, seed, post, data.get("name", ""))


def render_words(alphabet: Alphabet, words: Iterable[Word]) -> List[str]:
    return [alphabet.render(w) for w in sort_words(words)]
