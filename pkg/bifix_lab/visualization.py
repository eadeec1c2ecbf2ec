"""Text tables and DOT graphs for factor sets, codes, subgroup graphs and suite reports."""

from collections import Counter
from typing import TYPE_CHECKING, Dict, List, Optional, Sequence

from .core.codes import BifixCode
from .core.extensions import ExtensionGraph, WordClassification
from .core.groups import SubgroupGraph
from .core.words import ComplexityProfile, FactorSet

if TYPE_CHECKING:
    from .lab.suite import SuiteReport


def _table(header: Sequence[str], rows: Sequence[Sequence[object]]) -> str:
    cells = [[str(c) for c in header]] + [[str(c) for c in row] for row in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(header))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


class LabVisualizer:
    """Renders lab objects as plain-text tables and Graphviz DOT."""

    def __init__(self) -> None:
        self.colors = {
            "strong": "#4CAF50",  # Green
            "weak": "#F44336",  # Red
            "neutral": "#2196F3",  # Blue
            "left": "#FFC107",  # Amber
            "right": "#9C27B0",  # Purple
            "base": "#FF5722",  # Deep Orange
            "vertex": "#00BCD4",  # Cyan
        }

    def word_table(self, S: FactorSet, up_to: Optional[int] = None) -> str:
        """Words of S grouped by length."""
        top = S.horizon if up_to is None else min(up_to, S.horizon)
        rows = [[n, S.count(n), " ".join(S.render_words(n))] for n in range(top + 1)]
        return _table(["n", "p_n", "words"], rows)

    def complexity_table(self, profile: ComplexityProfile, up_to: Optional[int] = None) -> str:
        top = profile.horizon if up_to is None else min(up_to, profile.horizon)
        rows = []
        for n in range(top + 1):
            s = profile.s[n] if n < len(profile.s) else ""
            b = profile.b[n] if n < len(profile.b) else ""
            rows.append([n, profile.p[n], s, b])
        return _table(["n", "p_n", "s_n", "b_n"], rows)

    def classification_table(
        self, S: FactorSet, classifications: Sequence[WordClassification]
    ) -> str:
        """One row per word: extension counts, m(w) and the flags of G(w)."""
        render = S.alphabet.render
        rows = []
        for c in classifications:
            p = c.profile
            pairs = " ".join(
                S.alphabet.symbol(a) + S.alphabet.symbol(b) for a, b in sorted(p.pairs)
            )
            rows.append(
                [
                    render(c.word),
                    p.ell,
                    p.r,
                    p.e,
                    f"{p.m:+d}" if p.m else "0",
                    c.word_class.value,
                    "yes" if c.ordinary else "no",
                    "yes" if c.acyclic else "no",
                    "yes" if c.tree else "no",
                    pairs,
                ]
            )
        header = ["w", "l", "r", "e", "m", "class", "ordinary", "acyclic", "tree", "E(w)"]
        return _table(header, rows)

    def code_table(self, codes: Sequence[BifixCode]) -> str:
        rows = [[i, len(X), X.max_len, " ".join(X.render())] for i, X in enumerate(codes)]
        return _table(["#", "Card", "max_len", "words"], rows)

    def class_matrix(self, report: "SuiteReport") -> str:
        """Entries against CT/RT/BT/BD."""
        matrix = report.class_matrix()
        header = ["set", "class", "complexity", "CT", "RT", "BT", "BD"]
        rows = [[name] + [row[c] for c in header[1:]] for name, row in matrix.items()]
        return _table(header, rows)

    def suite_summary(self, report: "SuiteReport", verbose: bool = False) -> str:
        tally = report.tally()
        lines = [
            "Theorem lab",
            "",
            self.class_matrix(report),
            "",
            "verdicts: "
            + ", ".join(f"{name} {tally[name]}" for name in ("pass", "fail", "inapplicable", "skipped")),
            f"expected failures: {tally['expected_failures']}, "
            f"unexpected failures: {tally['unexpected_failures']}",
        ]
        failures = Counter(
            f"  [{'expected' if r.expected_failure else 'UNEXPECTED'}] "
            f"{r.entry} {r.theorem.value}: {'; '.join(r.witnesses)}"
            for r in report.reports
            if r.verdict.value == "fail"
        )
        if failures:
            lines.append("")
            for line, count in failures.items():
                lines.append(line if count == 1 else f"{line} ×{count}")
        if report.skipped:
            lines.append("")
            for r in report.skipped:
                lines.append(
                    f"  [skipped] {r.entry} {r.theorem.value}: needs horizon "
                    f"{r.horizons.get('required')} ({r.note})"
                )
        if verbose:
            lines.append("")
            for r in report.reports:
                lines.append(f"  {r.entry:<18} {r.theorem.value:<24} {r.verdict.value}")
        return "\n".join(lines)

    def extension_graph_dot(self, S: FactorSet, graph: ExtensionGraph) -> str:
        """Bipartite G(w) with left letters on one rank and right letters on the other."""
        symbol = S.alphabet.symbol
        name = S.alphabet.render(graph.word)
        m = len(graph.edges) - len(graph.left) - len(graph.right) + 1
        word_class = "strong" if m > 0 else "weak" if m < 0 else "neutral"
        lines = [
            f"graph {_quote('G(' + name + ')')} {{",
            "  rankdir=LR;",
            f"  label={_quote(f'm = {m}')}; fontcolor={_quote(self.colors[word_class])};",
        ]
        for a in sorted(graph.left):
            lines.append(
                f"  {_quote('L' + symbol(a))} [label={_quote(symbol(a))}, "
                f"style=filled, fillcolor={_quote(self.colors['left'])}];"
            )
        for b in sorted(graph.right):
            lines.append(
                f"  {_quote('R' + symbol(b))} [label={_quote(symbol(b))}, "
                f"style=filled, fillcolor={_quote(self.colors['right'])}];"
            )
        for a, b in sorted(graph.edges):
            lines.append(f"  {_quote('L' + symbol(a))} -- {_quote('R' + symbol(b))};")
        lines.append("}")
        return "\n".join(lines)

    def subgroup_graph_dot(self, G: SubgroupGraph, title: str = "H") -> str:
        """Canonically numbered folded graph; the base vertex is 0."""
        count, edges = G.canonical_form()
        lines = [f"digraph {_quote(title)} {{"]
        for v in range(count):
            color = self.colors["base"] if v == 0 else self.colors["vertex"]
            shape = "doublecircle" if v == 0 else "circle"
            lines.append(f"  {v} [shape={shape}, style=filled, fillcolor={_quote(color)}];")
        for s, a, t in edges:
            lines.append(f"  {s} -> {t} [label={_quote(G.alphabet.symbol(a))}];")
        lines.append("}")
        return "\n".join(lines)

    def key_value_block(self, values: Dict[str, object]) -> str:
        width = max((len(k) for k in values), default=0)
        return "\n".join(f"{k.ljust(width)}  {v}" for k, v in values.items())

    def words_line(self, words: List[str]) -> str:
        return " ".join(words) if words else "(none)"
