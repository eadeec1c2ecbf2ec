"""
Alphabets and words.

Letters are canonicalised to dense indices into an Alphabet; a word is a plain
tuple of those indices. Symbol names only come back when a word is rendered.
"""

from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, Sequence, Set, Tuple

from .errors import SymbolError

Word = Tuple[int, ...]

EMPTY: Word = ()
EMPTY_TOKENS = ("ε", "eps")


def shortlex(word: Word) -> Tuple[int, Word]:
    """Sort key: shorter words first, then lexicographic on letter order."""
    return (len(word), word)


def sort_words(words: Iterable[Word]) -> List[Word]:
    return sorted(set(words), key=shortlex)


def is_prefix(u: Word, w: Word) -> bool:
    return len(u) <= len(w) and w[: len(u)] == u


def is_suffix(u: Word, w: Word) -> bool:
    return len(u) <= len(w) and w[len(w) - len(u) :] == u


def factors_of_length(word: Word, n: int) -> Set[Word]:
    """All factors of length n of word."""
    if n > len(word):
        return set()
    return {word[i : i + n] for i in range(len(word) - n + 1)}


def occurrences(word: Word, pattern: Word) -> Iterator[int]:
    """Start positions of pattern inside word, left to right."""
    m = len(pattern)
    for i in range(len(word) - m + 1):
        if word[i : i + m] == pattern:
            yield i


def has_factor(word: Word, pattern: Word) -> bool:
    return next(occurrences(word, pattern), None) is not None


@dataclass(frozen=True)
class Alphabet:
    """
    Ordered list of distinct symbol names.

    The order fixes the canonical sort of words. Names may have several
    characters; they must not contain whitespace, commas or '^'.
    """

    letters: Tuple[str, ...]
    _index: Dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if not self.letters:
            raise SymbolError("alphabet must have at least one letter")
        index: Dict[str, int] = {}
        for position, name in enumerate(self.letters):
            if not name or any(ch.isspace() or ch in ",^" for ch in name):
                raise SymbolError(f"invalid symbol name {name!r}")
            if name in EMPTY_TOKENS:
                raise SymbolError(f"symbol name {name!r} is reserved for the empty word")
            if name in index:
                raise SymbolError(f"duplicate symbol {name!r}")
            index[name] = position
        object.__setattr__(self, "_index", index)

    @classmethod
    def of(cls, symbols: Iterable[str]) -> "Alphabet":
        """Build from any iterable of names; a plain string is split per character."""
        return cls(tuple(symbols))

    @property
    def size(self) -> int:
        return len(self.letters)

    @property
    def compact(self) -> bool:
        """True when every symbol is one character, so words print unseparated."""
        return all(len(name) == 1 for name in self.letters)

    def index(self, symbol: str) -> int:
        try:
            return self._index[symbol]
        except KeyError:
            raise SymbolError(f"unknown symbol {symbol!r} for alphabet {self}") from None

    def symbol(self, letter: int) -> str:
        return self.letters[letter]

    def word(self, symbols: Sequence[str]) -> Word:
        """Word from a sequence of symbol names (the JSON form)."""
        return tuple(self.index(s) for s in symbols)

    def parse(self, text: str) -> Word:
        """
        Parse one command-line word.

        Args:
            text: comma-joined symbols ("b,a,b"), a compact string ("bab") for
                single-character alphabets, a single symbol, or "ε"/"eps".

        Returns:
            The word as letter indices.
        """
        text = text.strip()
        if text in EMPTY_TOKENS or text == "":
            return EMPTY
        if "," in text:
            return self.word([part.strip() for part in text.split(",")])
        if text in self._index:
            return (self._index[text],)
        if self.compact:
            return self.word(list(text))
        raise SymbolError(
            f"cannot split {text!r}; join multi-character symbols with commas"
        )

    def parse_many(self, text: str) -> List[Word]:
        """Whitespace-separated list of words."""
        return [self.parse(token) for token in text.split()]

    def render(self, word: Word) -> str:
        if not word:
            return "ε"
        names = [self.letters[letter] for letter in word]
        return "".join(names) if self.compact else ",".join(names)

    def to_json_word(self, word: Word) -> List[str]:
        return [self.letters[letter] for letter in word]

    def all_letters(self) -> List[Word]:
        return [(i,) for i in range(self.size)]

    def __str__(self) -> str:
        return "{" + ",".join(self.letters) + "}"
