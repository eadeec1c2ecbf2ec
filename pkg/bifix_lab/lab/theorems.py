"""
Theorems - Horizon-Qualified Verifiers

Each verifier takes finite data (a factor set, a code, a morphism
with its seed), runs the relevant sub-checks and returns a TheoremReport.
A verdict is PASS only when every sub-check passed; INAPPLICABLE means the
hypotheses of the statement are not met by the input, in which case the
observed values are still recorded.

Key Responsibilities:
- Cardinality relation between Card(X), the S-degree and the alphabet size
- Subgroup index and basis checks for bifix codes and uniform codes
- Return words as bases of the free group
- Internal transformations, decoding closure and the neutrality converse check
"""

import logging
from dataclasses import dataclass, field
from datetime import datetime
from enum import Enum
from typing import Any, Dict, List, Optional, Sequence

from ..core.alphabet import Word
from ..core.codes import (
    BifixCode,
    arity_sum,
    bifix_decode,
    coding_morphism,
    enumerate_s_maximal_bifix,
    internal_transformation,
    is_s_maximal,
    s_degree,
    transformation_parts,
    uniform_code,
)
from ..core.errors import CodeError, HorizonError, ReturnWordsError
from ..core.extensions import (
    SetVerdict,
    check_complexity_class,
    check_enumeration_identities,
    classify_set,
    extension_profile,
)
from ..core.groups import (
    IndexMarker,
    check_saturation,
    dependency_witness,
    stallings_fold,
    subgroup_index,
    subgroup_rank,
)
from ..core.words import FactorSet, FixpointSpec, complexity_profile

logger = logging.getLogger(__name__)


class Verdict(Enum):
    PASS = "pass"
    FAIL = "fail"
    INAPPLICABLE = "inapplicable"
    SKIPPED = "skipped"


class TheoremId(Enum):
    """Statements the lab checks."""
    CARDINALITY = "cardinality"
    FINITE_INDEX_BASIS = "finite_index_basis"
    CONVERSE_BASIS = "converse_basis"
    RETURN_WORDS = "return_words"
    CLASSIFICATION = "classification"
    COMPLEXITY = "complexity"
    ENUMERATION_IDENTITIES = "enumeration_identities"
    SATURATION = "saturation"
    NEUTRALITY_CONVERSE = "neutrality_converse"
    DECODING = "decoding"
    INTERNAL_TRANSFORMATION = "internal_transformation"


CITATIONS: Dict[TheoremId, str] = {
    TheoremId.CARDINALITY: (
        "Cardinality theorem: an S-maximal bifix code of S-degree d satisfies "
        "Card(X) - 1 = d(Card(A) - 1) in a neutral set, >= in a strong set, "
        "<= in a weak set; Card(X) = 1 + sum of r(p) - 1 over proper prefixes"
    ),
    TheoremId.FINITE_INDEX_BASIS: (
        "Finite index basis property: in a uniformly recurrent tree set a finite "
        "bifix code is S-maximal of S-degree d iff it is a basis of a subgroup of index d"
    ),
    TheoremId.CONVERSE_BASIS: (
        "In a tree set S ∩ A^n is a basis of a subgroup of index n, with "
        "n(Card(A) - 1) + 1 elements"
    ),
    TheoremId.RETURN_WORDS: (
        "Return words theorem: the first return words to a word of a uniformly "
        "recurrent tree set form a basis of the free group on A"
    ),
    TheoremId.CLASSIFICATION: "Extension graph classification of the set",
    TheoremId.COMPLEXITY: (
        "Factor complexity: neutral sets have p_n = kn + 1, strong sets p_n >= kn + 1, "
        "weak sets p_n <= kn + 1"
    ),
    TheoremId.ENUMERATION_IDENTITIES: (
        "Counting identities: b_n = sum of m(w) and s_n = sum of r(w) - 1 over S ∩ A^n"
    ),
    TheoremId.SATURATION: (
        "Saturation: for a bifix code X of an acyclic set, <X> ∩ S = X* ∩ S"
    ),
    TheoremId.NEUTRALITY_CONVERSE: (
        "If every S-maximal bifix code of S-degree d has d(Card(A) - 1) + 1 "
        "elements, then S is neutral"
    ),
    TheoremId.DECODING: (
        "Maximal bifix decoding of a tree set by an S-maximal bifix code X is a tree "
        "set on Card(X) letters, of complexity (Card(X) - 1)n + 1"
    ),
    TheoremId.INTERNAL_TRANSFORMATION: (
        "Internal transformation maps an S-maximal bifix code of S-degree d to an "
        "S-maximal bifix code of S-degree at most d; Card(Y) = Card(X) + m(w) "
        "when Gw and wD are disjoint"
    ),
}


@dataclass
class SubCheck:
    """One named condition inside a report."""

    name: str
    passed: bool
    detail: str = ""


@dataclass
class TheoremReport:
    """
    Outcome of one verification.

    Args:
        theorem: which statement was checked
        entry: registry entry or input label
        inputs: rendered inputs and observed values
        verdict: PASS only when every sub-check passed
        checks: individual conditions
        witnesses: counterexample words, codes or relations
        horizons: horizons consumed, by purpose
    """

    theorem: TheoremId
    entry: str
    inputs: Dict[str, Any]
    verdict: Verdict
    checks: List[SubCheck] = field(default_factory=list)
    witnesses: List[str] = field(default_factory=list)
    horizons: Dict[str, int] = field(default_factory=dict)
    note: str = ""
    expected_failure: bool = False
    timestamp: datetime = field(default_factory=datetime.now)

    @property
    def citation(self) -> str:
        return CITATIONS[self.theorem]

    @property
    def unexpected_failure(self) -> bool:
        return self.verdict is Verdict.FAIL and not self.expected_failure

    def to_dict(self) -> Dict[str, Any]:
        return {
            "theorem": self.theorem.value,
            "citation": self.citation,
            "entry": self.entry,
            "inputs": self.inputs,
            "verdict": self.verdict.value,
            "expected_failure": self.expected_failure,
            "checks": [
                {"name": c.name, "passed": c.passed, "detail": c.detail} for c in self.checks
            ],
            "witnesses": list(self.witnesses),
            "horizons": dict(self.horizons),
            "note": self.note,
        }

    def __repr__(self) -> str:
        return f"TheoremReport({self.theorem.value}, {self.entry!r}, {self.verdict.value})"


def _verdict_of(checks: Sequence[SubCheck]) -> Verdict:
    return Verdict.PASS if all(c.passed for c in checks) else Verdict.FAIL


def _index_text(index: Any) -> str:
    return "infinite" if index is IndexMarker.INFINITE else str(index)


def skipped_report(
    theorem: TheoremId, entry: str, error: HorizonError, inputs: Optional[Dict[str, Any]] = None
) -> TheoremReport:
    """A SKIPPED report carrying the horizon the check would need."""
    logger.debug("skipping %s on %s: %s", theorem.value, entry, error)
    return TheoremReport(
        theorem,
        entry,
        dict(inputs or {}),
        Verdict.SKIPPED,
        horizons={"required": error.required, "available": error.available},
        note=str(error),
    )


def _code_inputs(X: BifixCode) -> Dict[str, Any]:
    return {"code": X.render(), "card": len(X), "max_len": X.max_len}


def verify_cardinality(
    S: FactorSet, X: BifixCode, verdict: SetVerdict, entry: str = ""
) -> TheoremReport:
    """
    Compare Card(X) - 1 with d * k in the direction fixed by the class of S,
    and check Card(X) = 1 + arity_sum(X, S).

    Raises:
        HorizonError: the classification does not reach the proper prefixes of X
        CodeError: X is not S-maximal
    """
    if verdict.certified_length < X.max_len - 1:
        raise HorizonError("verify_cardinality", X.max_len + 1, verdict.certified_length + 2)
    maximality = is_s_maximal(X, S)
    if not maximality.maximal:
        raise CodeError(f"{X} is not S-maximal")
    k = S.k
    degree = s_degree(X, S)
    card = len(X)
    excess = card - 1 - degree * k
    arity = 1 + arity_sum(X, S)

    inputs = _code_inputs(X)
    inputs.update({"degree": degree, "k": k, "class": verdict.class_name()})
    checks = [SubCheck("arity", arity == card, f"1 + Σ(r(p) - 1) = {arity}, Card(X) = {card}")]
    witnesses: List[str] = []
    note = ""
    detail = f"Card(X) - 1 = {card - 1}, d·k = {degree * k}"

    if verdict.neutral:
        checks.append(SubCheck("Card(X) - 1 = d·k", excess == 0, detail))
    elif verdict.strong:
        checks.append(SubCheck("Card(X) - 1 >= d·k", excess >= 0, detail))
    elif verdict.weak:
        checks.append(SubCheck("Card(X) - 1 <= d·k", excess <= 0, detail))
    else:
        note = f"set is neither strong nor weak up to length {verdict.certified_length}"
        checks.append(SubCheck("Card(X) - 1 = d·k", excess == 0, detail))

    result = _verdict_of(checks)
    if result is Verdict.FAIL:
        witnesses.append(detail)
    elif note:
        result = Verdict.INAPPLICABLE
    return TheoremReport(
        TheoremId.CARDINALITY,
        entry or S.name,
        inputs,
        result,
        checks,
        witnesses,
        {"factor_set": S.horizon, "classification": verdict.certified_length},
        note,
    )


def verify_finite_index_basis(
    S: FactorSet, X: BifixCode, verdict: SetVerdict, entry: str = ""
) -> TheoremReport:
    """
    Forward: S-maximal of S-degree d gives a complete folded graph with index d
    and rank Card(X). Converse: a basis of a finite index subgroup tests
    S-maximal with S-degree equal to the index.
    """
    graph = stallings_fold(X.words, S.alphabet)
    index = subgroup_index(graph)
    rank = subgroup_rank(graph)
    basis = rank == len(X)
    maximal = is_s_maximal(X, S).maximal
    inputs = _code_inputs(X)
    inputs.update({"index": _index_text(index), "rank": rank, "maximal": maximal})

    witnesses: List[str] = []
    if not basis:
        relation = dependency_witness(X.words, S.alphabet)
        if relation is not None:
            x, others = relation
            alphabet = S.alphabet
            witnesses.append(
                f"{x.render(alphabet)} ∈ <{', '.join(o.render(alphabet) for o in others)}>"
            )
        else:
            witnesses.append(f"rank {rank} < Card(X) = {len(X)}")

    horizons = {"factor_set": S.horizon, "classification": verdict.certified_length}
    if not verdict.tree:
        return TheoremReport(
            TheoremId.FINITE_INDEX_BASIS,
            entry or S.name,
            inputs,
            Verdict.INAPPLICABLE,
            witnesses=witnesses,
            horizons=horizons,
            note=f"set is not a tree set up to length {verdict.certified_length}",
        )

    checks: List[SubCheck] = []
    if maximal:
        degree = s_degree(X, S)
        inputs["degree"] = degree
        checks.append(SubCheck("index = S-degree", index == degree,
                               f"index {_index_text(index)}, degree {degree}"))
        checks.append(SubCheck("rank = Card(X)", basis, f"rank {rank}, Card(X) {len(X)}"))
    if basis and index is not IndexMarker.INFINITE:
        checks.append(SubCheck("basis of finite index is S-maximal", maximal))
        if maximal:
            checks.append(SubCheck("S-degree = index", inputs["degree"] == index))
    note = "" if checks else "neither direction applies"
    return TheoremReport(
        TheoremId.FINITE_INDEX_BASIS,
        entry or S.name,
        inputs,
        _verdict_of(checks),
        checks,
        witnesses,
        horizons,
        note,
    )


def verify_converse_fib(
    S: FactorSet, n: int, verdict: SetVerdict, entry: str = ""
) -> TheoremReport:
    """
    Fold S ∩ A^n; index n, basis and Card = n(Card(A) - 1) + 1 are expected
    of tree sets. A non-tree set reports the failing n with a dependency.

    Raises:
        HorizonError: n > N
    """
    S.require(n, "verify_converse_fib")
    X = uniform_code(S, n)
    graph = stallings_fold(X.words, S.alphabet)
    index = subgroup_index(graph)
    rank = subgroup_rank(graph)
    expected = n * S.k + 1
    checks = [
        SubCheck("index = n", index == n, f"index {_index_text(index)}"),
        SubCheck("basis", rank == len(X), f"rank {rank}, Card {len(X)}"),
        SubCheck("Card = n·k + 1", len(X) == expected, f"Card {len(X)}, expected {expected}"),
    ]
    inputs = {"n": n, "card": len(X), "index": _index_text(index), "rank": rank}
    witnesses: List[str] = []
    if rank != len(X):
        relation = dependency_witness(X.words, S.alphabet)
        if relation is not None:
            x, others = relation
            witnesses.append(
                f"{x.render(S.alphabet)} ∈ <{', '.join(o.render(S.alphabet) for o in others)}>"
            )
    result = _verdict_of(checks)
    note = ""
    if not verdict.tree:
        note = f"set is not a tree set up to length {verdict.certified_length}"
    return TheoremReport(
        TheoremId.CONVERSE_BASIS,
        entry or S.name,
        inputs,
        result,
        checks,
        witnesses,
        {"factor_set": S.horizon, "n": n},
        note,
    )


def verify_return_words(
    spec: FixpointSpec,
    w: Word,
    scan_len: int = 2000,
    verdict: Optional[SetVerdict] = None,
    entry: str = "",
) -> TheoremReport:
    """
    Fold R_S(w): index 1, rank |A| and Card(R_S(w)) = |A|.

    The empty word is rejected. With a verdict showing S is not a tree set the
    report is INAPPLICABLE.

    Raises:
        ReturnWordsError: w empty, or the scan is not stable under doubling
    """
    if not w:
        raise ReturnWordsError("return words need a nonempty word")
    found = spec.return_words(w, scan_len)
    alphabet = spec.alphabet
    if not found.complete:
        raise ReturnWordsError(
            f"return words of {alphabet.render(w)} still change at scan length {found.scan_len}"
        )
    graph = stallings_fold(found.returns, alphabet)
    index = subgroup_index(graph)
    rank = subgroup_rank(graph)
    size = alphabet.size
    checks = [
        SubCheck("index 1", index == 1, f"index {_index_text(index)}"),
        SubCheck("rank = |A|", rank == size, f"rank {rank}"),
        SubCheck("Card = |A|", len(found.returns) == size, f"Card {len(found.returns)}"),
    ]
    inputs = {
        "word": alphabet.render(w),
        "returns": [alphabet.render(x) for x in found.returns],
        "index": _index_text(index),
        "rank": rank,
    }
    result = _verdict_of(checks)
    note = ""
    if verdict is not None and not verdict.tree:
        result = Verdict.INAPPLICABLE
        note = f"set is not a tree set up to length {verdict.certified_length}"
    return TheoremReport(
        TheoremId.RETURN_WORDS,
        entry or spec.name,
        inputs,
        result,
        checks,
        horizons={"scan_len": found.scan_len},
        note=note,
    )


def verify_classification(
    S: FactorSet, verdict: SetVerdict, expected: Dict[str, bool], entry: str = ""
) -> TheoremReport:
    """Compare the computed class flags with the expected ones."""
    checks = [
        SubCheck(name, verdict.flags[name] == value, f"observed {verdict.flags[name]}")
        for name, value in expected.items()
    ]
    witnesses = [
        f"{name}: {S.alphabet.render(word)}"
        for name, word in verdict.witnesses.items()
        if word is not None
    ]
    inputs = verdict.to_json(S)
    inputs["class"] = verdict.class_name()
    return TheoremReport(
        TheoremId.CLASSIFICATION,
        entry or S.name,
        inputs,
        _verdict_of(checks),
        checks,
        witnesses,
        {"factor_set": S.horizon, "classification": verdict.certified_length},
    )


def verify_complexity(
    S: FactorSet, verdict: SetVerdict, slope: int, intercept: int = 1, entry: str = ""
) -> TheoremReport:
    """p_n = slope·n + intercept on the whole horizon, plus the class bound."""
    profile = complexity_profile(S)
    defect = profile.linear_defect(slope, intercept)
    bound = check_complexity_class(S, verdict)
    checks = [
        SubCheck(
            f"p_n = {slope}n + {intercept}",
            defect is None,
            "" if defect is None else f"n = {defect}: p_n = {profile.p[defect]}",
        ),
        SubCheck(
            f"class bound ({bound.relation})",
            bound.holds,
            f"violations at {bound.violations}" if bound.violations else "",
        ),
    ]
    return TheoremReport(
        TheoremId.COMPLEXITY,
        entry or S.name,
        {"p": list(profile.p[: min(len(profile.p), 31)]), "k": S.k, "relation": bound.relation},
        _verdict_of(checks),
        checks,
        horizons={"factor_set": S.horizon, "class_bound": bound.certified_up_to},
    )


def verify_enumeration_identities(S: FactorSet, up_to: int, entry: str = "") -> TheoremReport:
    """
    b_n = Σ m(w) and s_n = Σ (r(w) - 1) for n <= up_to.

    Raises:
        HorizonError: up_to > N - 2
    """
    S.require(up_to + 2, "verify_enumeration_identities")
    checks = []
    for n in range(up_to + 1):
        result = check_enumeration_identities(S, n)
        checks.append(
            SubCheck(
                f"n = {n}",
                result.holds,
                f"b_n {result.b_n} / Σm {result.sum_m}, s_n {result.s_n} / Σ(r-1) {result.sum_r}",
            )
        )
    return TheoremReport(
        TheoremId.ENUMERATION_IDENTITIES,
        entry or S.name,
        {"up_to": up_to},
        _verdict_of(checks),
        checks,
        horizons={"factor_set": S.horizon},
    )


def verify_saturation(
    S: FactorSet, X: BifixCode, up_to: int, verdict: SetVerdict, entry: str = ""
) -> TheoremReport:
    """<X> ∩ S = X* ∩ S on words of length <= up_to; INAPPLICABLE unless acyclic."""
    S.require(up_to, "verify_saturation")
    report = check_saturation(S, X, up_to)
    checks = [SubCheck("<X> ∩ S ⊆ X*", report.holds, f"{report.members} of {report.checked} in <X>")]
    result = _verdict_of(checks)
    note = ""
    if not verdict.acyclic:
        result = Verdict.INAPPLICABLE
        note = f"set is not acyclic up to length {verdict.certified_length}"
    return TheoremReport(
        TheoremId.SATURATION,
        entry or S.name,
        {**_code_inputs(X), "up_to": up_to},
        result,
        checks,
        [S.alphabet.render(w) for w in report.violations],
        {"factor_set": S.horizon},
        note,
    )


def verify_internal_transformation(
    S: FactorSet, X: BifixCode, w: Word, entry: str = ""
) -> TheoremReport:
    """
    Transform X at pivot w and check the result: bifix by construction,
    S-maximal, S-degree at most that of X, Card(Y) = Card(X) + m(w) when
    Gw ∩ wD is empty.
    """
    render = S.alphabet.render
    inputs = {**_code_inputs(X), "pivot": render(w)}
    try:
        Y = internal_transformation(X, S, w)
    except CodeError as exc:
        return TheoremReport(
            TheoremId.INTERNAL_TRANSFORMATION,
            entry or S.name,
            inputs,
            Verdict.FAIL,
            [SubCheck("transformation defined", False, str(exc))],
            [str(exc)],
            {"factor_set": S.horizon},
        )
    parts = transformation_parts(X.words, w)
    degree = s_degree(X, S)
    observed = s_degree(Y, S)
    inputs.update(
        {"result": Y.render(), "result_card": len(Y), "degree": degree, "result_degree": observed}
    )
    checks = [
        SubCheck("S-maximal", is_s_maximal(Y, S).maximal),
        SubCheck("S-degree <= d", observed <= degree, f"{observed} <= {degree}"),
    ]
    if not parts.overlapping:
        m = extension_profile(S, w).m
        inputs["m"] = m
        checks.append(
            SubCheck(
                "Card(Y) = Card(X) + m(w)",
                len(Y) == len(X) + m,
                f"{len(Y)} = {len(X)} + {m}",
            )
        )
    return TheoremReport(
        TheoremId.INTERNAL_TRANSFORMATION,
        entry or S.name,
        inputs,
        _verdict_of(checks),
        checks,
        horizons={"factor_set": S.horizon},
    )


def verify_decoding(
    S: FactorSet, X: BifixCode, horizon: int, verdict: SetVerdict, entry: str = ""
) -> TheoremReport:
    """
    Decode S by X up to length `horizon` and compare with the tree-set
    prediction: complexity (Card(X) - 1)n + 1, and a tree set again when S is.

    Raises:
        HorizonError: N < horizon * max_len(X) + max_len(X)
    """
    coding = coding_morphism(X)
    decoded = bifix_decode(S, coding, horizon, name=f"{S.name}-decoded")
    k = len(X) - 1
    profile = complexity_profile(decoded)
    defect = profile.linear_defect(k, 1)
    checks = [
        SubCheck(
            f"p_n = {k}n + 1",
            defect is None,
            "" if defect is None else f"n = {defect}: p_n = {profile.p[defect]}",
        )
    ]
    if verdict.tree and horizon >= 2:
        decoded_verdict = classify_set(decoded, min(verdict.certified_length, horizon - 2))
        checks.append(SubCheck("decoded set is a tree set", decoded_verdict.tree))
    witnesses = []
    if defect is not None:
        witnesses.append(f"{profile.p[defect]} words of length {defect}, expected {k * defect + 1}")
    return TheoremReport(
        TheoremId.DECODING,
        entry or S.name,
        {
            **_code_inputs(X),
            "letters": list(coding.alphabet.letters),
            "p": list(profile.p),
        },
        _verdict_of(checks),
        checks,
        witnesses,
        {"factor_set": S.horizon, "decoded": horizon},
    )


def check_neutrality_converse(
    S: FactorSet,
    verdict: SetVerdict,
    degree: int,
    max_len: int,
    codes: Optional[List[BifixCode]] = None,
    entry: str = "",
) -> TheoremReport:
    """
    Look for S-maximal bifix codes of S-degree `degree` whose cardinality
    differs from degree·k + 1. Such codes in a non-neutral set witness the
    contrapositive and PASS; in a neutral set they FAIL. Without any such
    code a non-neutral set is INAPPLICABLE at this degree.

    Raises:
        HorizonError: N < 2 * max_len
    """
    if codes is None:
        codes = enumerate_s_maximal_bifix(S, degree, max_len)
    expected = degree * S.k + 1
    violators = [X for X in codes if len(X) != expected]
    inputs = {
        "degree": degree,
        "max_len": max_len,
        "codes": len(codes),
        "expected_card": expected,
        "cards": sorted({len(X) for X in codes}),
    }
    witnesses = [f"{len(X)}: {' '.join(X.render())}" for X in violators]
    if violators:
        result = Verdict.FAIL if verdict.neutral else Verdict.PASS
        checks = [SubCheck("violations only in non-neutral sets", not verdict.neutral)]
        note = ""
    else:
        result = Verdict.PASS if verdict.neutral else Verdict.INAPPLICABLE
        checks = [SubCheck("all cardinalities equal d·k + 1", True)]
        note = "" if verdict.neutral else "no violating code at this degree and length"
    return TheoremReport(
        TheoremId.NEUTRALITY_CONVERSE,
        entry or S.name,
        inputs,
        result,
        checks,
        witnesses,
        {"factor_set": S.horizon, "max_len": max_len},
        note,
    )
