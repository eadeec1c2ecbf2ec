"""
Suite - Theorem Lab Orchestration

Runs every verifier over every registry entry at the configured horizons,
collects TheoremReports, annotates predicted failures from the registry and
summarises the outcome as a class/property matrix.

Key Responsibilities:
- One independent job per registry entry, optionally run in a thread pool
- SKIPPED reports carrying the horizon a check would have needed
- Event log of everything that happened during the run
- Class matrix with CT (cardinality), RT (return words), BT (finite index
  basis) and BD (bifix decoding) columns
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime
from typing import Any, Callable, Dict, List, Optional

from ..config import LabConfig
from ..core.codes import enumerate_s_maximal_bifix, internal_transformation, uniform_code
from ..core.errors import BifixLabError, HorizonError, ReturnWordsError
from ..core.extensions import SetVerdict, classify_set
from ..core.words import FactorSet
from .registry import ExampleRegistry, RegistryEntry
from .theorems import (
    TheoremId,
    TheoremReport,
    Verdict,
    check_neutrality_converse,
    skipped_report,
    verify_cardinality,
    verify_classification,
    verify_complexity,
    verify_converse_fib,
    verify_decoding,
    verify_enumeration_identities,
    verify_finite_index_basis,
    verify_internal_transformation,
    verify_return_words,
    verify_saturation,
)

logger = logging.getLogger(__name__)

MATRIX_COLUMNS = {
    "CT": TheoremId.CARDINALITY,
    "RT": TheoremId.RETURN_WORDS,
    "BT": TheoremId.FINITE_INDEX_BASIS,
    "BD": TheoremId.DECODING,
}


@dataclass
class LabEvent:
    """Record of one step of a suite run."""

    timestamp: datetime
    event_type: str
    entry: str
    theorem: Optional[str]
    verdict: Optional[str]
    description: str

    def to_dict(self) -> Dict[str, Any]:
        return {
            "timestamp": self.timestamp.isoformat(),
            "event_type": self.event_type,
            "entry": self.entry,
            "theorem": self.theorem,
            "verdict": self.verdict,
            "description": self.description,
        }


@dataclass
class EntryOutcome:
    """Everything one registry entry produced."""

    entry: str
    set_class: str = "unbuilt"
    complexity: str = ""
    reports: List[TheoremReport] = field(default_factory=list)
    events: List[LabEvent] = field(default_factory=list)


@dataclass
class SuiteReport:
    """Aggregate of all entry outcomes, in registry order."""

    config: LabConfig
    outcomes: List[EntryOutcome] = field(default_factory=list)

    @property
    def reports(self) -> List[TheoremReport]:
        return [r for outcome in self.outcomes for r in outcome.reports]

    @property
    def events(self) -> List[LabEvent]:
        return [e for outcome in self.outcomes for e in outcome.events]

    @property
    def unexpected_failures(self) -> List[TheoremReport]:
        return [r for r in self.reports if r.unexpected_failure]

    @property
    def skipped(self) -> List[TheoremReport]:
        return [r for r in self.reports if r.verdict is Verdict.SKIPPED]

    @property
    def ok(self) -> bool:
        return not self.unexpected_failures

    def class_matrix(self) -> Dict[str, Dict[str, str]]:
        """
        Per entry: set class, complexity and one cell per column.

        A cell is "yes" when every report of that theorem passed, "no" when
        one failed, "n/a" when none applied.
        """
        matrix: Dict[str, Dict[str, str]] = {}
        for outcome in self.outcomes:
            row = {"class": outcome.set_class, "complexity": outcome.complexity}
            for column, theorem in MATRIX_COLUMNS.items():
                verdicts = {r.verdict for r in outcome.reports if r.theorem is theorem}
                if Verdict.FAIL in verdicts:
                    row[column] = "no"
                elif Verdict.PASS in verdicts:
                    row[column] = "yes"
                else:
                    row[column] = "n/a"
            matrix[outcome.entry] = row
        return matrix

    def tally(self) -> Dict[str, int]:
        counts = {v.value: 0 for v in Verdict}
        for report in self.reports:
            counts[report.verdict.value] += 1
        counts["expected_failures"] = sum(
            1 for r in self.reports if r.verdict is Verdict.FAIL and r.expected_failure
        )
        counts["unexpected_failures"] = len(self.unexpected_failures)
        return counts

    def get_event_summary(self) -> Dict[str, Any]:
        events = self.events
        by_type: Dict[str, int] = {}
        for event in events:
            by_type[event.event_type] = by_type.get(event.event_type, 0) + 1
        return {
            "total_events": len(events),
            "by_type": by_type,
            "entries": [outcome.entry for outcome in self.outcomes],
        }

    def to_dict(self) -> Dict[str, Any]:
        return {
            "config": self.config.to_dict(),
            "ok": self.ok,
            "tally": self.tally(),
            "matrix": self.class_matrix(),
            "reports": [r.to_dict() for r in self.reports],
            "skipped": [
                {
                    "entry": r.entry,
                    "theorem": r.theorem.value,
                    "required_horizon": r.horizons.get("required"),
                    "reason": r.note,
                }
                for r in self.skipped
            ],
            "events": [e.to_dict() for e in self.events],
            "event_summary": self.get_event_summary(),
        }


class TheoremLab:
    """
    Runs the verifiers over a registry.

    Entries are independent jobs over immutable factor sets; with
    config.parallel they run in a thread pool and are reassembled in
    registry order.
    """

    def __init__(self, registry: ExampleRegistry, config: Optional[LabConfig] = None) -> None:
        self.config = config or LabConfig()
        self.registry = registry.select(self.config.only) if self.config.only else registry

    def run(self) -> SuiteReport:
        entries = list(self.registry)
        if self.config.parallel and len(entries) > 1:
            with ThreadPoolExecutor(max_workers=len(entries)) as pool:
                outcomes = list(pool.map(self.run_entry, entries))
        else:
            outcomes = [self.run_entry(entry) for entry in entries]
        report = SuiteReport(self.config, outcomes)
        logger.info(
            "suite finished: %d reports, %d unexpected failures",
            len(report.reports),
            len(report.unexpected_failures),
        )
        return report

    def _log_event(
        self,
        outcome: EntryOutcome,
        event_type: str,
        description: str,
        report: Optional[TheoremReport] = None,
    ) -> None:
        outcome.events.append(
            LabEvent(
                timestamp=datetime.now(),
                event_type=event_type,
                entry=outcome.entry,
                theorem=report.theorem.value if report else None,
                verdict=report.verdict.value if report else None,
                description=description,
            )
        )

    def _record(self, outcome: EntryOutcome, entry: RegistryEntry, report: TheoremReport) -> None:
        report.entry = entry.name
        if report.verdict is Verdict.FAIL and report.theorem.value in entry.expected_failures:
            report.expected_failure = True
        outcome.reports.append(report)
        if report.verdict is Verdict.SKIPPED:
            event_type = "skipped"
        elif report.unexpected_failure:
            event_type = "unexpected_failure"
            logger.warning("%s failed on %s: %s", report.theorem.value, entry.name, report.witnesses)
        elif report.expected_failure:
            event_type = "expected_failure"
        else:
            event_type = "verified"
        self._log_event(outcome, event_type, report.note or report.citation, report)

    def _guarded(
        self,
        outcome: EntryOutcome,
        entry: RegistryEntry,
        theorem: TheoremId,
        check: Callable[[], TheoremReport],
        inputs: Optional[Dict[str, Any]] = None,
    ) -> TheoremReport:
        """Run one check; a HorizonError becomes a SKIPPED report."""
        try:
            report = check()
        except HorizonError as exc:
            report = skipped_report(theorem, entry.name, exc, inputs)
        self._record(outcome, entry, report)
        return report

    def run_entry(self, entry: RegistryEntry) -> EntryOutcome:
        outcome = EntryOutcome(entry.name)
        config = self.config
        try:
            S = entry.build(config.horizon)
        except BifixLabError as exc:
            report = TheoremReport(
                TheoremId.CLASSIFICATION, entry.name, {}, Verdict.FAIL, note=f"build failed: {exc}"
            )
            self._record(outcome, entry, report)
            return outcome
        self._log_event(outcome, "built", f"{S!r} ({S.certificate.source if S.certificate else 'given'})")

        up_to = min(config.classify_up_to, S.horizon - 2)
        if up_to < config.classify_up_to:
            self._record(
                outcome,
                entry,
                skipped_report(
                    TheoremId.CLASSIFICATION,
                    entry.name,
                    HorizonError("classify_set", config.classify_up_to + 2, S.horizon),
                    {"certified_length": up_to},
                ),
            )
        verdict = classify_set(S, up_to)
        outcome.set_class = verdict.class_name()
        slope, intercept = entry.complexity
        outcome.complexity = f"{slope}n+{intercept}"

        self._record(outcome, entry, verify_classification(S, verdict, entry.expected_flags))
        self._record(outcome, entry, verify_complexity(S, verdict, slope, intercept))
        self._guarded(
            outcome,
            entry,
            TheoremId.ENUMERATION_IDENTITIES,
            lambda: verify_enumeration_identities(S, config.identities_up_to),
        )
        for n in range(1, config.converse_up_to + 1):
            self._guarded(
                outcome,
                entry,
                TheoremId.CONVERSE_BASIS,
                lambda n=n: verify_converse_fib(S, n, verdict),
                {"n": n},
            )
        if entry.fixpoint is not None:
            self._run_return_words(outcome, entry, S, verdict)
        if entry.recurrent:
            self._run_codes(outcome, entry, S, verdict)
        else:
            self._log_event(outcome, "note", "not uniformly recurrent: code checks not run")
        return outcome

    def _run_return_words(
        self, outcome: EntryOutcome, entry: RegistryEntry, S: FactorSet, verdict: SetVerdict
    ) -> None:
        spec = entry.fixpoint
        if spec is None:
            return
        for w in S.all_words(self.config.return_word_lengths):
            if not w:
                continue
            try:
                report = verify_return_words(spec, w, self.config.scan_len, verdict)
            except ReturnWordsError as exc:
                report = TheoremReport(
                    TheoremId.RETURN_WORDS,
                    entry.name,
                    {"word": S.alphabet.render(w)},
                    Verdict.SKIPPED,
                    horizons={"scan_len": self.config.scan_len},
                    note=str(exc),
                )
            self._record(outcome, entry, report)

    def _run_codes(
        self, outcome: EntryOutcome, entry: RegistryEntry, S: FactorSet, verdict: SetVerdict
    ) -> None:
        config = self.config
        for degree in range(1, config.max_degree + 1):
            try:
                codes = enumerate_s_maximal_bifix(S, degree, config.enumeration_max_len)
            except HorizonError as exc:
                self._record(
                    outcome,
                    entry,
                    skipped_report(TheoremId.CARDINALITY, entry.name, exc, {"degree": degree}),
                )
                continue
            self._log_event(outcome, "enumerated", f"{len(codes)} codes of degree {degree}")
            for X in codes:
                self._guarded(
                    outcome,
                    entry,
                    TheoremId.CARDINALITY,
                    lambda X=X: verify_cardinality(S, X, verdict),
                )
                self._record(outcome, entry, verify_finite_index_basis(S, X, verdict))
                if verdict.tree:
                    self._guarded(
                        outcome,
                        entry,
                        TheoremId.SATURATION,
                        lambda X=X: verify_saturation(
                            S, X, config.saturation_up_to, verdict
                        ),
                    )
            if degree >= 2:
                self._record(
                    outcome,
                    entry,
                    check_neutrality_converse(
                        S, verdict, degree, config.enumeration_max_len, codes
                    ),
                )

        for n, pivot in entry.pivots:
            w = S.alphabet.parse(pivot)
            self._guarded(
                outcome,
                entry,
                TheoremId.INTERNAL_TRANSFORMATION,
                lambda n=n, w=w: verify_internal_transformation(
                    S, uniform_code(S, n), w
                ),
                {"n": n, "pivot": pivot},
            )
        if entry.decoding_check is not None:
            n, pivot, horizon = entry.decoding_check
            self._guarded(
                outcome,
                entry,
                TheoremId.DECODING,
                lambda: verify_decoding(
                    S,
                    internal_transformation(uniform_code(S, n), S, S.alphabet.parse(pivot)),
                    horizon,
                    verdict,
                ),
                {"n": n, "pivot": pivot, "decoded_horizon": horizon},
            )


def run_suite(registry: ExampleRegistry, config: Optional[LabConfig] = None) -> SuiteReport:
    """Run the theorem lab over `registry` and return the aggregate report."""
    return TheoremLab(registry, config).run()
