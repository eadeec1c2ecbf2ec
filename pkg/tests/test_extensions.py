"""Tests for extension sets, extension graphs and set classification."""

import pytest

from bifix_lab.core.errors import HorizonError, WordNotInSetError
from bifix_lab.core.extensions import (
    WordClass,
    bispecial_words,
    check_complexity_class,
    check_enumeration_identities,
    classify_set,
    classify_word,
    extension_graph,
    extension_profile,
    right_special_words,
)


def pairs(S, profile):
    symbol = S.alphabet.symbol
    return {symbol(a) + symbol(b) for a, b in profile.pairs}


class TestExtensionProfile:
    """Test L(w), R(w), E(w) and m(w)."""

    def test_chacon_strong_word(self, chacon):
        """Test abc has the full 2x2 extension set."""
        profile = extension_profile(chacon, chacon.alphabet.parse("abc"))
        assert pairs(chacon, profile) == {"aa", "ca", "ab", "cb"}
        assert profile.m == 1
        assert profile.word_class is WordClass.STRONG

    def test_chacon_weak_word(self, chacon):
        """Test bca has two extensions."""
        profile = extension_profile(chacon, chacon.alphabet.parse("bca"))
        assert pairs(chacon, profile) == {"aa", "cb"}
        assert profile.m == -1
        assert profile.word_class is WordClass.WEAK

    def test_chacon_empty_word(self, chacon):
        """Test the empty word of Chacon is neutral."""
        profile = extension_profile(chacon, ())
        assert (profile.e, profile.ell, profile.r, profile.m) == (5, 3, 3, 0)

    def test_outside_word(self, fibonacci):
        """Test words outside S are refused."""
        with pytest.raises(WordNotInSetError):
            extension_profile(fibonacci, fibonacci.alphabet.parse("bb"))

    def test_horizon(self, fibonacci):
        """Test E(w) needs |w| + 2 <= N."""
        with pytest.raises(HorizonError) as info:
            extension_profile(fibonacci, fibonacci.words(39)[0])
        assert info.value.required == 41


class TestExtensionGraph:
    """Test the bipartite graph G(w)."""

    def test_fibonacci_empty_word_is_tree(self, fibonacci):
        """Test G(ε) of the Fibonacci set."""
        graph = extension_graph(fibonacci, ())
        assert graph.edges == frozenset({(0, 0), (0, 1), (1, 0)})
        assert graph.components == 1
        assert graph.is_tree

    def test_single_edge(self, fibonacci):
        """Test a word with one extension on each side."""
        graph = extension_graph(fibonacci, fibonacci.alphabet.parse("aab"))
        assert len(graph.edges) == 1
        assert graph.is_tree

    def test_neutral_not_tree(self, neutral_not_tree):
        """Test G(ε) of a*{bc,bcbc}a* has a cycle and two components."""
        graph = extension_graph(neutral_not_tree, ())
        assert graph.components == 2
        assert graph.cycle is not None
        assert graph.cycle[0] == graph.cycle[-1]
        assert not graph.is_acyclic

    def test_cassaigne_empty_word(self, cassaigne):
        """Test G(ε) of the Cassaigne set is neither acyclic nor connected."""
        graph = extension_graph(cassaigne, ())
        assert not graph.is_acyclic
        assert graph.components > 1

    def test_networkx_view(self, chacon):
        """Test the networkx export keeps every edge."""
        graph = extension_graph(chacon, chacon.alphabet.parse("abc"))
        nx_graph = graph.to_networkx()
        assert nx_graph.number_of_nodes() == 4
        assert nx_graph.number_of_edges() == 4


class TestWordClassification:
    """Test classification of single words."""

    def test_chacon_abc(self, chacon):
        """Test abc is strong and not ordinary."""
        c = classify_word(chacon, chacon.alphabet.parse("abc"))
        assert c.word_class is WordClass.STRONG
        assert not c.ordinary
        assert not c.acyclic

    def test_chacon_bca(self, chacon):
        """Test bca is weak with an acyclic, disconnected graph."""
        c = classify_word(chacon, chacon.alphabet.parse("bca"))
        assert c.word_class is WordClass.WEAK
        assert c.acyclic
        assert not c.tree

    def test_sturmian_words_are_ordinary(self, fibonacci):
        """Test every bispecial Fibonacci word is ordinary and neutral."""
        found = bispecial_words(fibonacci, 12)
        assert found
        for w in found:
            c = classify_word(fibonacci, w)
            assert c.ordinary
            assert c.word_class is WordClass.NEUTRAL

    def test_right_special_words(self, fibonacci):
        """Test one right special word per length in a Sturmian set."""
        found = right_special_words(fibonacci, 6)
        assert sorted(len(w) for w in found) == list(range(7))


class TestSetClassification:
    """Test set-level verdicts."""

    def test_tree_sets(self, fibonacci_verdict, tribonacci):
        """Test Fibonacci and Tribonacci are tree sets."""
        assert fibonacci_verdict.tree
        assert fibonacci_verdict.class_name() == "tree"
        assert classify_set(tribonacci, 8).tree

    def test_cassaigne(self, cassaigne):
        """Test the Cassaigne set is neutral but not acyclic."""
        verdict = classify_set(cassaigne, 6)
        assert verdict.neutral
        assert not verdict.acyclic
        assert verdict.witnesses["acyclic"] == ()
        assert verdict.class_name() == "neutral"

    def test_cassaigne_up_to_ten(self, cassaigne):
        """Test the classification holds to length 10 with a cycle of G(ε) as witness."""
        verdict = classify_set(cassaigne, 10)
        assert verdict.certified_length == 10
        assert verdict.neutral
        assert not verdict.acyclic
        assert verdict.witnesses["acyclic"] == ()
        assert verdict.non_tree.word == ()
        cycle = verdict.non_tree.graph.cycle
        assert cycle is not None
        assert cycle[0] == cycle[-1]
        assert len(cycle) >= 5
        pairs = verdict.non_tree.profile.pairs
        for u, v in zip(cycle, cycle[1:]):
            left, right = (u, v) if u[0] == "L" else (v, u)
            assert (left[1], right[1]) in pairs

    @pytest.mark.parametrize(
        "name, up_to",
        [
            ("fibonacci", 10),
            ("tribonacci", 8),
            ("chacon", 6),
            ("cassaigne", 6),
            ("neutral_not_tree", 6),
        ],
    )
    def test_tree_iff_bispecial_graphs(self, request, name, up_to):
        """Test only bispecial non-ordinary words can break the tree flag."""
        verdict = classify_set(request.getfixturevalue(name), up_to)
        deciding = []
        for c in verdict.classifications:
            if c.profile.is_bispecial and not c.ordinary:
                deciding.append(c.tree)
            else:
                assert c.tree, c.word
        assert verdict.tree == all(deciding)

    def test_chacon(self, chacon):
        """Test Chacon has strong, weak and neutral words."""
        verdict = classify_set(chacon, 4)
        assert not verdict.strong
        assert not verdict.weak
        assert not verdict.neutral
        assert verdict.class_name() == "unclassified"
        counts = verdict.tallies[3]
        assert counts["strong"] >= 1
        assert counts["weak"] >= 1

    def test_neutral_not_tree(self, neutral_not_tree):
        """Test a*{bc,bcbc}a* is neutral with a non-tree witness at ε."""
        verdict = classify_set(neutral_not_tree, 6)
        assert verdict.neutral
        assert not verdict.tree
        assert verdict.non_tree.word == ()

    def test_verdict_json(self, chacon):
        """Test the exported verdict renders witnesses."""
        data = classify_set(chacon, 4).to_json(chacon)
        assert data["certified_length"] == 4
        assert data["flags"]["neutral"] is False
        assert data["non_tree_witness"] is not None

    def test_horizon(self, fibonacci):
        """Test classification is refused past N - 2."""
        with pytest.raises(HorizonError):
            classify_set(fibonacci, 39)


class TestEnumerationIdentities:
    """Test b_n = Σ m(w) and s_n = Σ (r(w) - 1)."""

    def test_fibonacci(self, fibonacci):
        for n in range(9):
            result = check_enumeration_identities(fibonacci, n)
            assert result.holds
            assert result.s_n == 1

    def test_tribonacci(self, tribonacci):
        for n in range(9):
            result = check_enumeration_identities(tribonacci, n)
            assert result.holds
            assert result.s_n == 2

    def test_chacon_mixed_signs(self, chacon):
        """Test m(w) of mixed signs sums to b_3 = 0."""
        result = check_enumeration_identities(chacon, 3)
        assert result.holds
        assert result.sum_m == 0


class TestComplexityClass:
    """Test complexity bounds implied by the class."""

    def test_neutral_equality(self, fibonacci, fibonacci_verdict):
        check = check_complexity_class(fibonacci, fibonacci_verdict)
        assert check.relation == "="
        assert check.holds

    def test_unclassified(self, chacon, chacon_verdict):
        check = check_complexity_class(chacon, chacon_verdict)
        assert check.relation == "none"
        assert check.holds


if __name__ == "__main__":
    pytest.main([__file__])
