"""Additional usage examples for Bifix Lab."""

from bifix_lab.core.alphabet import Alphabet
from bifix_lab.core.codes import (
    BifixCode,
    bifix_decode,
    coding_morphism,
    enumerate_s_maximal_bifix,
    is_s_maximal,
    s_degree,
)
from bifix_lab.core.extensions import classify_set, extension_graph
from bifix_lab.core.groups import GroupWord, contains, stallings_fold, subgroup_index
from bifix_lab.core.words import FixpointSpec, build_morphism, complexity_profile
from bifix_lab.visualization import LabVisualizer


def example_fixpoint_from_rules():
    """A factor set from morphism rules."""
    print("Example 1: Tribonacci factors")
    print("=" * 40)

    spec = FixpointSpec(build_morphism([("a", "ab"), ("b", "ac"), ("c", "a")]), 0, name="tribonacci")
    S = spec.factor_set(12)
    print(f"Prefix: {spec.alphabet.render(spec.prefix(20))}")
    print(f"Complexity: {list(complexity_profile(S).p)}")
    print(LabVisualizer().word_table(S, 3))
    print()


def example_extension_graph():
    """Extension graph of the empty word in the Cassaigne set."""
    print("Example 2: A neutral set that is not a tree set")
    print("=" * 40)

    sigma = build_morphism([("a", "ab"), ("b", "cda"), ("c", "cd"), ("d", "abc")])
    tau = build_morphism(
        [("a", "12"), ("b", "2"), ("c", "3"), ("d", "13")],
        source=sigma.target,
        target=Alphabet(("1", "2", "3")),
    )
    S = FixpointSpec(sigma, 0, tau, name="cassaigne").factor_set(16)
    graph = extension_graph(S, ())
    print(f"G(ε): {graph.components} components, cycle {graph.cycle}")
    print(f"Class up to 8: {classify_set(S, 8).class_name()}")
    print(LabVisualizer().extension_graph_dot(S, graph))
    print()


def example_codes_and_decoding():
    """Enumerate codes of degree 2 and decode Fibonacci by one of them."""
    print("Example 3: Maximal bifix codes of degree 2")
    print("=" * 40)

    S = FixpointSpec(build_morphism([("a", "ab"), ("b", "a")]), 0, name="fibonacci").factor_set(40)
    codes = enumerate_s_maximal_bifix(S, 2, 4)
    print(LabVisualizer().code_table(codes))

    X = BifixCode.parse(S.alphabet, "a baab bab")
    print(f"{X} S-maximal: {is_s_maximal(X, S).maximal}, S-degree {s_degree(X, S)}")
    decoded = bifix_decode(S, coding_morphism(X, ["u", "v", "w"]), 5)
    print(f"Decoded complexity: {list(complexity_profile(decoded).p)}")
    print()


def example_subgroup_membership():
    """Membership through the folded graph."""
    print("Example 4: Membership in a subgroup")
    print("=" * 40)

    alphabet = Alphabet(("a", "b", "c"))
    graph = stallings_fold(alphabet.parse_many("aa ab ca"), alphabet)
    element = GroupWord.parse(alphabet, "ca aa^-1 ab")
    print(f"Index: {subgroup_index(graph)}")
    print(f"cb ∈ <aa, ab, ca>: {contains(graph, alphabet.parse('cb'))}")
    print(f"{element.render(alphabet)} ∈ <aa, ab, ca>: {contains(graph, element)}")
    print()


if __name__ == "__main__":
    example_fixpoint_from_rules()
    example_extension_graph()
    example_codes_and_decoding()
    example_subgroup_membership()
