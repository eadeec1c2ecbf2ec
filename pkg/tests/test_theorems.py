"""Tests for the verifiers, the registry and the theorem suite."""

import pytest

from bifix_lab.config import LabConfig
from bifix_lab.core.codes import BifixCode, internal_transformation, uniform_code
from bifix_lab.core.errors import CodeError, ConfigError, HorizonError, ReturnWordsError
from bifix_lab.core.extensions import classify_set
from bifix_lab.lab.registry import FIBONACCI, TRIBONACCI, DECODED_MAX_HORIZON
from bifix_lab.lab.suite import EntryOutcome, SuiteReport, run_suite
from bifix_lab.lab.theorems import (
    TheoremId,
    TheoremReport,
    Verdict,
    check_neutrality_converse,
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
from bifix_lab.visualization import LabVisualizer

SMALL = dict(
    horizon=32,
    enumeration_max_len=4,
    max_degree=3,
    classify_up_to=8,
    converse_up_to=4,
    saturation_up_to=6,
    identities_up_to=6,
    scan_len=500,
)


@pytest.fixture(scope="module")
def chacon_codes(chacon):
    X = uniform_code(chacon, 4)
    Y = internal_transformation(X, chacon, chacon.alphabet.parse("abc"))
    Z = internal_transformation(X, chacon, chacon.alphabet.parse("bca"))
    return Y, Z


@pytest.fixture(scope="module")
def two_entry_report(registry):
    return run_suite(registry, LabConfig(only=["fibonacci", "chacon"], **SMALL))


class TestCardinality:
    """Test the cardinality verifier."""

    def test_fibonacci(self, fibonacci, fibonacci_verdict):
        X = BifixCode.parse(fibonacci.alphabet, "a baab bab")
        report = verify_cardinality(fibonacci, X, fibonacci_verdict)
        assert report.verdict is Verdict.PASS
        assert report.inputs["degree"] == 2
        assert report.inputs["card"] == 3

    def test_chacon_codes_fail(self, chacon, chacon_verdict, chacon_codes):
        """Test 10 - 1 > 8 and 8 - 1 < 8 are reported."""
        for X in chacon_codes:
            report = verify_cardinality(chacon, X, chacon_verdict)
            assert report.verdict is Verdict.FAIL
            assert report.witnesses
            assert report.note

    def test_non_maximal(self, fibonacci, fibonacci_verdict):
        with pytest.raises(CodeError):
            verify_cardinality(fibonacci, BifixCode.parse(fibonacci.alphabet, "a"), fibonacci_verdict)

    def test_classification_too_short(self, fibonacci):
        X = BifixCode.parse(fibonacci.alphabet, "a baab bab")
        with pytest.raises(HorizonError):
            verify_cardinality(fibonacci, X, classify_set(fibonacci, 1))


class TestFiniteIndexBasis:
    """Test the finite index basis verifier."""

    def test_fibonacci(self, fibonacci, fibonacci_verdict):
        X = BifixCode.parse(fibonacci.alphabet, "a baab bab")
        report = verify_finite_index_basis(fibonacci, X, fibonacci_verdict)
        assert report.verdict is Verdict.PASS
        assert report.inputs["index"] == "2"
        assert report.inputs["rank"] == 3

    def test_decoded(self, decoded):
        """Test the 7-word code over x, y, z, t."""
        verdict = classify_set(decoded, 6)
        X = BifixCode.parse(decoded.alphabet, "x yxy yxz zxxz zxxt txxt txy")
        report = verify_finite_index_basis(decoded, X, verdict)
        assert report.verdict is Verdict.PASS
        assert report.inputs["degree"] == 2
        assert report.inputs["rank"] == 7

    def test_chacon_inapplicable(self, chacon, chacon_verdict):
        """Test S ∩ A^2 of Chacon is reported with its relation."""
        report = verify_finite_index_basis(chacon, uniform_code(chacon, 2), chacon_verdict)
        assert report.verdict is Verdict.INAPPLICABLE
        assert report.inputs["index"] == "infinite"
        assert report.inputs["rank"] == 4
        assert any("∈" in w for w in report.witnesses)


class TestConverse:
    """Test S ∩ A^n as a basis."""

    def test_fibonacci(self, fibonacci, fibonacci_verdict):
        for n in range(1, 6):
            assert verify_converse_fib(fibonacci, n, fibonacci_verdict).verdict is Verdict.PASS

    def test_tribonacci(self, tribonacci):
        report = verify_converse_fib(tribonacci, 2, classify_set(tribonacci, 8))
        assert report.verdict is Verdict.PASS
        assert report.inputs["index"] == "2"
        assert report.inputs["rank"] == 5

    def test_cassaigne_fails(self, cassaigne):
        verdict = classify_set(cassaigne, 6)
        report = verify_converse_fib(cassaigne, 2, verdict)
        assert report.verdict is Verdict.FAIL
        assert report.witnesses
        assert report.note

    def test_alphabet(self, chacon, chacon_verdict):
        report = verify_converse_fib(chacon, 1, chacon_verdict)
        assert report.verdict is Verdict.PASS


class TestReturnWords:
    """Test return words as bases of the free group."""

    def test_fibonacci(self):
        report = verify_return_words(FIBONACCI, (0,), 500)
        assert report.verdict is Verdict.PASS
        assert report.inputs["returns"] == ["a", "ba"]

    def test_tribonacci(self):
        report = verify_return_words(TRIBONACCI, (0,), 500)
        assert report.verdict is Verdict.PASS
        assert report.inputs["rank"] == 3

    @pytest.mark.parametrize(
        "spec, word, returns",
        [
            (FIBONACCI, "b", ["ab", "aab"]),
            (FIBONACCI, "ab", ["ab", "aab"]),
            (TRIBONACCI, "b", ["ab", "aab", "acab"]),
        ],
    )
    def test_longer_and_other_letters(self, spec, word, returns):
        """Test return words to b and ab form a basis of the free group."""
        report = verify_return_words(spec, spec.alphabet.parse(word), 500)
        assert report.verdict is Verdict.PASS
        assert report.inputs["returns"] == returns
        assert report.inputs["index"] == "1"
        assert report.inputs["rank"] == spec.alphabet.size

    def test_empty_word(self):
        with pytest.raises(ReturnWordsError):
            verify_return_words(FIBONACCI, (), 500)


class TestOtherVerifiers:
    """Test classification, complexity, identities, saturation and transformations."""

    def test_classification(self, chacon, chacon_verdict, registry):
        expected = registry.get("chacon").expected_flags
        report = verify_classification(chacon, chacon_verdict, expected)
        assert report.verdict is Verdict.PASS
        assert report.inputs["class"] == "unclassified"

    def test_classification_mismatch(self, chacon, chacon_verdict):
        report = verify_classification(chacon, chacon_verdict, {"neutral": True})
        assert report.verdict is Verdict.FAIL

    def test_complexity(self, chacon, chacon_verdict):
        assert verify_complexity(chacon, chacon_verdict, 2, 1).verdict is Verdict.PASS
        assert verify_complexity(chacon, chacon_verdict, 1, 1).verdict is Verdict.FAIL

    def test_identities(self, tribonacci):
        assert verify_enumeration_identities(tribonacci, 8).verdict is Verdict.PASS

    def test_saturation(self, fibonacci, fibonacci_verdict, chacon, chacon_verdict):
        X = BifixCode.parse(fibonacci.alphabet, "a baab bab")
        assert verify_saturation(fibonacci, X, 8, fibonacci_verdict).verdict is Verdict.PASS
        report = verify_saturation(chacon, uniform_code(chacon, 2), 6, chacon_verdict)
        assert report.verdict is Verdict.INAPPLICABLE

    def test_internal_transformation(self, fibonacci, chacon):
        report = verify_internal_transformation(fibonacci, uniform_code(fibonacci, 2), (1,))
        assert report.verdict is Verdict.PASS
        assert report.inputs["m"] == 0
        report = verify_internal_transformation(chacon, uniform_code(chacon, 4), chacon.alphabet.parse("abc"))
        assert report.verdict is Verdict.PASS
        assert report.inputs["result_card"] == 10

    def test_internal_transformation_undefined(self, fibonacci):
        X = BifixCode.parse(fibonacci.alphabet, "a")
        report = verify_internal_transformation(fibonacci, X, (0,))
        assert report.verdict is Verdict.FAIL

    def test_decoding(self, fibonacci, fibonacci_verdict, chacon, chacon_verdict, chacon_codes):
        X = BifixCode.parse(fibonacci.alphabet, "a baab bab")
        assert verify_decoding(fibonacci, X, 6, fibonacci_verdict).verdict is Verdict.PASS
        _, Z = chacon_codes
        report = verify_decoding(chacon, Z, 2, chacon_verdict)
        assert report.verdict is Verdict.FAIL
        assert report.inputs["p"][2] == 17

    def test_neutrality_converse(self, fibonacci, fibonacci_verdict, chacon, chacon_verdict, chacon_codes):
        """Test violators pass in a non-neutral set and fail in a neutral one."""
        report = check_neutrality_converse(chacon, chacon_verdict, 4, 5, list(chacon_codes))
        assert report.verdict is Verdict.PASS
        assert len(report.witnesses) == 2
        assert check_neutrality_converse(fibonacci, fibonacci_verdict, 2, 4).verdict is Verdict.PASS
        wrong = check_neutrality_converse(
            fibonacci, fibonacci_verdict, 2, 4, [uniform_code(fibonacci, 3)]
        )
        assert wrong.verdict is Verdict.FAIL

    def test_report_dict(self, fibonacci, fibonacci_verdict):
        report = verify_converse_fib(fibonacci, 2, fibonacci_verdict)
        data = report.to_dict()
        assert data["theorem"] == "converse_basis"
        assert data["verdict"] == "pass"
        assert data["citation"]


class TestRegistry:
    """Test the example registry."""

    def test_names(self, registry):
        assert registry.names() == [
            "fibonacci",
            "tribonacci",
            "chacon",
            "cassaigne",
            "neutral-not-tree",
            "fibonacci-decoded",
        ]

    def test_unknown(self, registry):
        with pytest.raises(ConfigError):
            registry.get("thue-morse")

    def test_decoded_horizon_capped(self, registry):
        entry = registry.get("fibonacci-decoded")
        assert entry.horizon_for(64) == DECODED_MAX_HORIZON
        assert entry.horizon_for(6) == 6

    def test_duplicate(self, registry):
        with pytest.raises(ConfigError):
            registry.select(["fibonacci", "fibonacci"])


class TestConfig:
    """Test LabConfig validation."""

    def test_defaults(self):
        config = LabConfig()
        assert config.horizon == 64
        assert config.to_dict()["only"] == []

    def test_invalid(self):
        with pytest.raises(ConfigError):
            LabConfig(horizon=0)
        with pytest.raises(ConfigError) as info:
            LabConfig.from_dict({"horizn": 10})
        assert info.value.key == "horizn"

    def test_from_file(self, tmp_path):
        path = tmp_path / "lab.json"
        path.write_text('{"horizon": 20, "only": ["fibonacci"]}', encoding="utf-8")
        config = LabConfig.from_json_file(path)
        assert config.horizon == 20
        assert config.only == ["fibonacci"]
        path.write_text("[1, 2]", encoding="utf-8")
        with pytest.raises(ConfigError):
            LabConfig.from_json_file(path)


class TestSuite:
    """Test the theorem suite."""

    def test_fibonacci_only(self, registry):
        report = run_suite(registry, LabConfig(only=["fibonacci"], **SMALL))
        assert report.ok
        assert report.unexpected_failures == []
        assert not report.skipped
        theorems = {r.theorem for r in report.reports}
        assert TheoremId.CARDINALITY in theorems
        assert TheoremId.DECODING in theorems

    def test_small_horizon_skips(self, registry):
        """Test checks that need more than the horizon are skipped with the required horizon."""
        report = run_suite(registry, LabConfig(horizon=6, only=["fibonacci"]))
        assert report.skipped
        for r in report.skipped:
            assert r.horizons["required"] > 6
        classification = [r for r in report.skipped if r.theorem is TheoremId.CLASSIFICATION]
        assert classification[0].horizons["required"] == 12

    def test_class_matrix(self, two_entry_report):
        matrix = two_entry_report.class_matrix()
        assert matrix["fibonacci"]["class"] == "tree"
        assert all(matrix["fibonacci"][c] == "yes" for c in ("CT", "RT", "BT", "BD"))
        assert matrix["chacon"]["class"] == "unclassified"
        assert matrix["chacon"]["complexity"] == "2n+1"
        assert matrix["chacon"]["BD"] == "no"
        assert matrix["chacon"]["BT"] == "n/a"

    def test_expected_failures(self, two_entry_report):
        """Test Chacon's failures are all predicted."""
        assert two_entry_report.ok
        tally = two_entry_report.tally()
        assert tally["expected_failures"] > 0
        assert tally["unexpected_failures"] == 0

    def test_parallel_matches_serial(self, registry, two_entry_report):
        parallel = run_suite(registry, LabConfig(only=["fibonacci", "chacon"], parallel=True, **SMALL))
        assert parallel.class_matrix() == two_entry_report.class_matrix()
        assert parallel.tally() == two_entry_report.tally()

    def test_report_dict_and_events(self, two_entry_report):
        data = two_entry_report.to_dict()
        assert data["ok"] is True
        assert data["event_summary"]["entries"] == ["fibonacci", "chacon"]
        assert data["event_summary"]["by_type"]["built"] == 2
        assert data["event_summary"]["by_type"]["expected_failure"] > 0

    def test_summary_text(self, two_entry_report):
        text = LabVisualizer().suite_summary(two_entry_report)
        assert "fibonacci" in text
        assert "[expected] chacon" in text

    def test_summary_groups_repeats(self):
        """Test identical failure lines are printed once with a count."""
        def failure(witness):
            return TheoremReport(
                TheoremId.CONVERSE_BASIS, "chacon", {}, Verdict.FAIL,
                witnesses=[witness], expected_failure=True,
            )

        reports = [failure("rank 5 < Card(X) = 6")] * 5 + [failure("ab ∈ <a, b>")]
        report = SuiteReport(LabConfig(), [EntryOutcome("chacon", reports=reports)])
        lines = LabVisualizer().suite_summary(report).splitlines()
        assert "  [expected] chacon converse_basis: rank 5 < Card(X) = 6 ×5" in lines
        assert "  [expected] chacon converse_basis: ab ∈ <a, b>" in lines
        assert sum("[expected]" in line for line in lines) == 2


if __name__ == "__main__":
    pytest.main([__file__])
