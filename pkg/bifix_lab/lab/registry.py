"""
Registry - Named Example Sets

Each entry knows how to build its factor set at a horizon, which class flags
it is expected to show, which verifications are predicted to fail on it and
which extra checks (pivots for internal transformations, decoding checks)
the suite should run on it. The command line resolves its builtin names
through the same entries.
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, FrozenSet, Iterator, List, Optional, Sequence, Tuple

from ..core.alphabet import Alphabet
from ..core.codes import BifixCode, bifix_decode, coding_morphism
from ..core.errors import ConfigError
from ..core.words import FactorSet, FixpointSpec, build_morphism, factor_set_of_words

logger = logging.getLogger(__name__)

FIBONACCI = FixpointSpec(build_morphism([("a", "ab"), ("b", "a")]), 0, name="fibonacci")
TRIBONACCI = FixpointSpec(
    build_morphism([("a", "ab"), ("b", "ac"), ("c", "a")]), 0, name="tribonacci"
)
CHACON = FixpointSpec(
    build_morphism([("a", "aabc"), ("b", "bc"), ("c", "abc")]), 0, name="chacon"
)
_CASSAIGNE_SIGMA = build_morphism([("a", "ab"), ("b", "cda"), ("c", "cd"), ("d", "abc")])
CASSAIGNE = FixpointSpec(
    _CASSAIGNE_SIGMA,
    0,
    build_morphism(
        [("a", "12"), ("b", "2"), ("c", "3"), ("d", "13")],
        source=_CASSAIGNE_SIGMA.target,
        target=Alphabet(("1", "2", "3")),
    ),
    name="cassaigne",
)

DECODED_LETTERS = ("x", "y", "z", "t")
DECODING_CODE = ("a", "baabaab", "baabab", "babaab")  # images of x, y, z, t
DECODED_MAX_HORIZON = 14


def _neutral_not_tree(horizon: int) -> FactorSet:
    """Factors of a^i {bc, bcbc} a^j, i, j <= N; both families sit inside a^N . a^N."""
    alphabet = Alphabet(("a", "b", "c"))
    run = (0,) * horizon
    words = [run + (1, 2) + run, run + (1, 2, 1, 2) + run]
    return factor_set_of_words(alphabet, words, horizon, name="neutral-not-tree")


def _fibonacci_decoded(horizon: int) -> FactorSet:
    """Fibonacci set decoded by the degree-3 code {a, baabaab, baabab, babaab}."""
    longest = max(len(w) for w in DECODING_CODE)
    S = FIBONACCI.factor_set(horizon * longest + longest)
    order = [S.alphabet.parse(w) for w in DECODING_CODE]
    coding = coding_morphism(BifixCode(S.alphabet, tuple(order)), DECODED_LETTERS, order)
    return bifix_decode(S, coding, horizon, name="fibonacci-decoded")


@dataclass
class RegistryEntry:
    """
    A named example set.

    Args:
        name: registry and command-line name
        citation: what the set is and why it is in the registry
        builder: horizon -> FactorSet
        expected_flags: class flags the classification must reproduce
        complexity: (slope, intercept) of p_n
        expected_failures: theorem ids whose FAIL verdict is predicted
    """

    name: str
    citation: str
    builder: Callable[[int], FactorSet]
    expected_flags: Dict[str, bool]
    complexity: Tuple[int, int]
    fixpoint: Optional[FixpointSpec] = None
    recurrent: bool = True
    max_horizon: Optional[int] = None
    expected_failures: FrozenSet[str] = frozenset()
    pivots: Tuple[Tuple[int, str], ...] = ()  # (n, pivot) applied to S ∩ A^n
    decoding_check: Optional[Tuple[int, str, int]] = None  # (n, pivot, M)

    def horizon_for(self, requested: int) -> int:
        return requested if self.max_horizon is None else min(requested, self.max_horizon)

    def build(self, horizon: int) -> FactorSet:
        """Factor set at the requested horizon, capped by max_horizon."""
        effective = self.horizon_for(horizon)
        logger.debug("building %s at horizon %d", self.name, effective)
        return self.builder(effective)


@dataclass
class ExampleRegistry:
    """Ordered collection of RegistryEntry objects."""

    entries: Dict[str, RegistryEntry] = field(default_factory=dict)

    def register(self, entry: RegistryEntry) -> None:
        if entry.name in self.entries:
            raise ConfigError(f"registry already has an entry named {entry.name!r}")
        self.entries[entry.name] = entry

    def get(self, name: str) -> RegistryEntry:
        try:
            return self.entries[name]
        except KeyError:
            raise ConfigError(
                f"unknown example set {name!r}; known: {', '.join(self.entries)}", "set"
            ) from None

    def names(self) -> List[str]:
        return list(self.entries)

    def select(self, names: Sequence[str]) -> "ExampleRegistry":
        chosen = ExampleRegistry()
        for name in names:
            chosen.register(self.get(name))
        return chosen

    def __iter__(self) -> Iterator[RegistryEntry]:
        return iter(self.entries.values())

    def __len__(self) -> int:
        return len(self.entries)


TREE_FLAGS = {"strong": True, "weak": True, "neutral": True, "acyclic": True, "tree": True}


def default_registry() -> ExampleRegistry:
    registry = ExampleRegistry()
    registry.register(
        RegistryEntry(
            name="fibonacci",
            citation="Fibonacci word, fixpoint of a->ab, b->a: Sturmian, a tree set",
            builder=FIBONACCI.factor_set,
            expected_flags=dict(TREE_FLAGS),
            complexity=(1, 1),
            fixpoint=FIBONACCI,
            pivots=((2, "b"), (2, "a")),
            decoding_check=(2, "a", 6),
        )
    )
    registry.register(
        RegistryEntry(
            name="tribonacci",
            citation="Tribonacci word, fixpoint of a->ab, b->ac, c->a: episturmian, a tree set",
            builder=TRIBONACCI.factor_set,
            expected_flags=dict(TREE_FLAGS),
            complexity=(2, 1),
            fixpoint=TRIBONACCI,
        )
    )
    registry.register(
        RegistryEntry(
            name="chacon",
            citation=(
                "Chacon word, fixpoint of a->aabc, b->bc, c->abc: complexity 2n+1 "
                "with strong, weak and neutral words"
            ),
            builder=CHACON.factor_set,
            expected_flags={
                "strong": False,
                "weak": False,
                "neutral": False,
                "acyclic": False,
                "tree": False,
            },
            complexity=(2, 1),
            fixpoint=CHACON,
            expected_failures=frozenset({"cardinality", "converse_basis", "decoding"}),
            pivots=((4, "abc"), (4, "bca")),
            decoding_check=(4, "bca", 2),
        )
    )
    registry.register(
        RegistryEntry(
            name="cassaigne",
            citation=(
                "Image by a->12, b->2, c->3, d->13 of the fixpoint of a->ab, b->cda, "
                "c->cd, d->abc: neutral, neither acyclic nor connected at the empty word"
            ),
            builder=CASSAIGNE.factor_set,
            expected_flags={
                "strong": True,
                "weak": True,
                "neutral": True,
                "acyclic": False,
                "tree": False,
            },
            complexity=(2, 1),
            fixpoint=CASSAIGNE,
            expected_failures=frozenset({"converse_basis"}),
        )
    )
    registry.register(
        RegistryEntry(
            name="neutral-not-tree",
            citation=(
                "Factors of a*{bc,bcbc}a*: neutral, G(ε) has a cycle and two components, "
                "not uniformly recurrent"
            ),
            builder=_neutral_not_tree,
            expected_flags={
                "strong": True,
                "weak": True,
                "neutral": True,
                "acyclic": False,
                "tree": False,
            },
            complexity=(2, 1),
            recurrent=False,
            expected_failures=frozenset({"converse_basis"}),
        )
    )
    registry.register(
        RegistryEntry(
            name="fibonacci-decoded",
            citation=(
                "Fibonacci set decoded by the degree-3 bifix code "
                "x->a, y->baabaab, z->baabab, t->babaab: a tree set on four letters"
            ),
            builder=_fibonacci_decoded,
            expected_flags=dict(TREE_FLAGS),
            complexity=(3, 1),
            max_horizon=DECODED_MAX_HORIZON,
        )
    )
    return registry


BUILTIN_NAMES = tuple(default_registry().names())
