#!/usr/bin/env python3
"""
Bifix Lab Demonstration

This script walks through the main pieces of the library:
- Factor sets of the Fibonacci and Chacon words at a finite horizon
- Extension graphs and the strong / weak / neutral classification
- Bifix codes, their S-degree and internal transformations
- Folding codes into subgroup graphs of the free group
- The theorem lab over the builtin registry
"""

import json
from datetime import datetime
from typing import Any, Dict

from bifix_lab.config import LabConfig
from bifix_lab.core import (
    BifixCode,
    FactorSet,
    classify_set,
    classify_word,
    complexity_profile,
    internal_transformation,
    parses,
    s_degree,
    stallings_fold,
    subgroup_index,
    subgroup_rank,
    uniform_code,
)
from bifix_lab.lab import default_registry, run_suite
from bifix_lab.visualization import LabVisualizer


def demonstrate_factor_sets() -> Dict[str, Any]:
    """
    Build the Fibonacci and Chacon factor sets and show their complexity.
    """
    print("Bifix Lab - Demonstration")
    print("=" * 60)

    registry = default_registry()
    fibonacci = registry.get("fibonacci").build(32)
    chacon = registry.get("chacon").build(32)

    print("\n1. Factor sets...")
    for S in (fibonacci, chacon):
        profile = complexity_profile(S)
        print(f"   ✅ {S!r}: p_0..p_8 = {list(profile.p[:9])}")
        if S.certificate is not None:
            print(f"      stabilised after {S.certificate.iterations} iterations")

    return {"fibonacci": fibonacci, "chacon": chacon}


def demonstrate_classification(fibonacci: FactorSet, chacon: FactorSet) -> Dict[str, Any]:
    """
    Classify words of Chacon by m(w) and certify Fibonacci as a tree set.
    """
    print("\n2. Extension graphs...")
    print("-" * 40)
    visualizer = LabVisualizer()
    words = [chacon.alphabet.parse(w) for w in ("ε", "abc", "bca")]
    rows = [classify_word(chacon, w) for w in words]
    print(visualizer.classification_table(chacon, rows))

    fib_verdict = classify_set(fibonacci, 10)
    chacon_verdict = classify_set(chacon, 10)
    print(f"\n   Fibonacci up to length 10: {fib_verdict.class_name()}")
    print(f"   Chacon up to length 10: {chacon_verdict.class_name()}")
    return {
        "chacon_m": {chacon.alphabet.render(c.word): c.profile.m for c in rows},
        "fibonacci_class": fib_verdict.class_name(),
        "chacon_class": chacon_verdict.class_name(),
    }


def demonstrate_codes(fibonacci: FactorSet, chacon: FactorSet) -> Dict[str, Any]:
    """
    Parses, S-degree and internal transformations.
    """
    print("\n3. Bifix codes...")
    print("-" * 40)
    alphabet = fibonacci.alphabet
    X = BifixCode.parse(alphabet, "a baab bab")
    bab = alphabet.parse("bab")
    print(f"   {X}: S-degree {s_degree(X, fibonacci)}")
    for p in parses(X, bab):
        print(f"      parse of bab: {p.render(alphabet)}")

    transforms: Dict[str, Any] = {}
    for pivot in ("b", "a"):
        Y = internal_transformation(uniform_code(fibonacci, 2), fibonacci, alphabet.parse(pivot))
        transforms[f"fibonacci/{pivot}"] = Y.render()
        print(f"   ✅ Fibonacci S ∩ A^2 at {pivot}: {' '.join(Y.render())}")
    for pivot in ("abc", "bca"):
        Y = internal_transformation(uniform_code(chacon, 4), chacon, chacon.alphabet.parse(pivot))
        transforms[f"chacon/{pivot}"] = Y.render()
        print(f"   ✅ Chacon S ∩ A^4 at {pivot}: {len(Y)} words, S-degree {s_degree(Y, chacon)}")
    return {"transforms": transforms}


def demonstrate_groups(fibonacci: FactorSet, chacon: FactorSet) -> Dict[str, Any]:
    """
    Fold codes into subgroup graphs and read off index and rank.
    """
    print("\n4. Subgroups of the free group...")
    print("-" * 40)
    results = {}
    for label, S, code in (
        ("fibonacci {a,bab,baab}", fibonacci, BifixCode.parse(fibonacci.alphabet, "a bab baab")),
        ("chacon S ∩ A^2", chacon, uniform_code(chacon, 2)),
    ):
        graph = stallings_fold(code.words, S.alphabet)
        index = subgroup_index(graph)
        rank = subgroup_rank(graph)
        shown = index if isinstance(index, int) else index.value
        results[label] = {"index": shown, "rank": rank, "card": len(code)}
        print(f"   {label}: index {shown}, rank {rank}, Card {len(code)}")
    print(LabVisualizer().subgroup_graph_dot(
        stallings_fold(BifixCode.parse(fibonacci.alphabet, "a bab baab").words, fibonacci.alphabet)
    ))
    return {"groups": results}


def demonstrate_suite() -> Dict[str, Any]:
    """
    Run the theorem lab over the registry with the default configuration.
    """
    print("\n5. Theorem lab...")
    print("-" * 40)
    report = run_suite(default_registry(), LabConfig(parallel=True))
    print(LabVisualizer().suite_summary(report))
    return {
        "matrix": report.class_matrix(),
        "tally": report.tally(),
        "event_summary": report.get_event_summary(),
        "ok": report.ok,
    }


def generate_final_report(results: Dict[str, Any]) -> Dict[str, Any]:
    """
    Collect the demonstration results and write them to disk.
    """
    print("\n6. Final report...")
    print("-" * 40)
    report = {
        "timestamp": datetime.now().isoformat(),
        "classification": results["classification"],
        "transforms": results["codes"]["transforms"],
        "groups": results["groups"]["groups"],
        "suite": results["suite"],
    }
    report_file = "bifix_lab_demo_report.json"
    with open(report_file, "w", encoding="utf-8") as f:
        json.dump(report, f, indent=2, ensure_ascii=False)
    print(f"   💾 Report saved to: {report_file}")
    return report


def main() -> None:
    """
    Main demonstration function
    """
    sets = demonstrate_factor_sets()
    results = {
        "classification": demonstrate_classification(**sets),
        "codes": demonstrate_codes(**sets),
        "groups": demonstrate_groups(**sets),
        "suite": demonstrate_suite(),
    }
    final = generate_final_report(results)

    print("\n" + "=" * 60)
    if final["suite"]["ok"]:
        print("All registry checks behaved as predicted.")
    else:
        print("Unexpected failures: see bifix_lab_demo_report.json")
    print("=" * 60)


if __name__ == "__main__":
    main()
