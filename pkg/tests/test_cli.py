"""Tests for the bifix-lab command line."""

import json

import pytest

from bifix_lab.cli import main
from bifix_lab.config import CliConfig
from bifix_lab.core.errors import ConfigError

CHACON_SPEC = {
    "alphabet": ["a", "b", "c"],
    "rules": {"a": "aabc", "b": "bc", "c": "abc"},
    "seed": "a",
}


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestWordCommands:
    """Test generate, classify, complexity and returns."""

    def test_prefix(self, capsys):
        code, out, _ = run(capsys, "generate", "--set", "fibonacci", "--prefix", "8")
        assert code == 0
        assert out.strip() == "abaababa"

    def test_generate_then_classify(self, capsys, tmp_path):
        """Test an exported factor set is accepted by --factors."""
        code, out, _ = run(capsys, "generate", "--set", "fibonacci", "--horizon", "10", "--format", "json")
        assert code == 0
        path = tmp_path / "fibonacci.json"
        path.write_text(out, encoding="utf-8")

        code, out, _ = run(capsys, "classify", "--factors", str(path), "--up-to", "6", "--format", "json")
        assert code == 0
        data = json.loads(out)
        assert data["class"] == "tree"
        assert data["verdict"]["certified_length"] == 6

    def test_classify_morphism_file(self, capsys, tmp_path):
        """Test the Chacon table shows strong and weak words."""
        path = tmp_path / "chacon.json"
        path.write_text(json.dumps(CHACON_SPEC), encoding="utf-8")
        code, out, _ = run(capsys, "classify", "--morphism", str(path), "--up-to", "4")
        assert code == 0
        rows = {line.split()[0]: line.split() for line in out.splitlines() if line.strip()}
        assert rows["abc"][5] == "strong"
        assert rows["bca"][5] == "weak"
        assert "unclassified" in out

    def test_classify_word_json(self, capsys):
        code, out, _ = run(
            capsys, "classify", "--set", "chacon", "--horizon", "12", "--word", "abc", "--format", "json"
        )
        assert code == 0
        data = json.loads(out)
        assert data["m"] == 1
        assert data["class"] == "strong"
        assert sorted(data["pairs"]) == [["a", "a"], ["a", "b"], ["c", "a"], ["c", "b"]]

    def test_classify_word_dot(self, capsys):
        code, out, _ = run(capsys, "classify", "--set", "chacon", "--horizon", "12", "--word", "bca", "--format", "dot")
        assert code == 0
        assert out.startswith('graph "G(bca)"')
        assert "m = -1" in out

    def test_complexity(self, capsys):
        code, out, _ = run(capsys, "complexity", "--set", "tribonacci", "--horizon", "12", "--format", "json")
        assert code == 0
        data = json.loads(out)
        assert data["p"][:5] == [1, 3, 5, 7, 9]
        assert data["linear_until"] is None

    def test_returns(self, capsys):
        code, out, _ = run(capsys, "returns", "--set", "fibonacci", "--word", "b", "--scan-len", "300")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "ab aab"
        assert lines[-1] == "index 1, rank 2"


class TestCodeCommands:
    """Test code-check, code-degree, transform, enumerate and decode."""

    def test_transform(self, capsys):
        code, out, _ = run(capsys, "transform", "--set", "fibonacci", "--code", "aa ab ba", "--pivot", "a")
        assert code == 0
        assert set(out.split()) == {"a", "baab", "bab"}

    def test_transform_json(self, capsys):
        code, out, _ = run(
            capsys, "transform", "--set", "fibonacci", "--code", "aa ab ba", "--pivot", "b", "--format", "json"
        )
        assert code == 0
        data = json.loads(out)
        assert data["degree"] == 2
        assert sorted("".join(w) for w in data["code"]["words"]) == ["aa", "aba", "b"]
        assert data["parts"]["G"] == ["a"]

    def test_code_degree(self, capsys):
        code, out, _ = run(
            capsys, "code-degree", "--set", "fibonacci", "--code", "a baab bab", "--word", "bab"
        )
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "S-degree 2"
        assert lines[1] == "δ(bab) = 2"
        assert lines[2].strip() == "(ε, bab, ε)"

    def test_code_check_json(self, capsys):
        code, out, _ = run(
            capsys, "code-check", "--set", "fibonacci", "--code", "a baab bab", "--format", "json"
        )
        assert code == 0
        data = json.loads(out)
        assert data["maximal"] is True
        assert data["degree"] == 2
        assert data["kernel"] == ["a"]

    def test_not_maximal(self, capsys):
        code, out, _ = run(capsys, "code-check", "--set", "fibonacci", "--horizon", "16", "--code", "a")
        assert code == 1
        assert "maximality_witness" in out

    def test_enumerate_then_degree(self, capsys, tmp_path):
        """Test a code picked from the enumeration output by --index."""
        code, out, _ = run(
            capsys, "enumerate", "--set", "fibonacci", "--horizon", "16",
            "--degree", "2", "--max-len", "4", "--format", "json",
        )
        assert code == 0
        data = json.loads(out)
        assert len(data["codes"]) == 3
        path = tmp_path / "codes.json"
        path.write_text(out, encoding="utf-8")
        for index in range(3):
            code, out, _ = run(
                capsys, "code-degree", "--set", "fibonacci", "--horizon", "16",
                "--code-file", str(path), "--index", str(index),
            )
            assert code == 0
            assert out.strip() == "S-degree 2"

    def test_decode(self, capsys):
        code, out, _ = run(
            capsys, "decode", "--set", "fibonacci", "--code", "a baab bab",
            "--letters", "u,v,w", "--decoded-horizon", "4", "--format", "json",
        )
        assert code == 0
        data = json.loads(out)
        assert data["alphabet"] == ["u", "v", "w"]
        assert data["coding"] == {"u": "a", "v": "bab", "w": "baab"}
        assert [len(data["words"][str(n)]) for n in range(5)] == [1, 3, 5, 7, 9]


class TestGroupCommand:
    """Test subgroup queries."""

    def test_index(self, capsys):
        code, out, _ = run(capsys, "group", "index", "--alphabet", "a,b", "--words", "a bab baab")
        assert code == 0
        assert out.splitlines() == ["index 2", "rank 3"]

    def test_contains(self, capsys):
        code, out, _ = run(
            capsys, "group", "contains", "--alphabet", "a,b,c", "--words", "aa ab ca", "--element", "cb"
        )
        assert code == 0
        assert out.strip() == "cb: yes"

    def test_basis_witness(self, capsys):
        code, out, _ = run(
            capsys, "group", "basis", "--alphabet", "a,b,c", "--words", "aa ab bc ca cb", "--format", "json"
        )
        assert code == 0
        data = json.loads(out)
        assert data["basis"] is False
        assert data["index"] == "infinite"
        assert data["witness"]["element"]

    def test_fold_dot(self, capsys):
        code, out, _ = run(capsys, "group", "fold", "--alphabet", "a,b", "--words", "a bab baab", "--format", "dot")
        assert code == 0
        assert out.startswith('digraph "H"')
        assert out.count(" -> ") == 4
        assert "doublecircle" in out

    def test_fold_then_index(self, capsys, tmp_path):
        code, out, _ = run(capsys, "group", "fold", "--alphabet", "a,b", "--words", "a bab baab", "--format", "json")
        assert code == 0
        path = tmp_path / "graph.json"
        path.write_text(json.dumps(json.loads(out)["graph"]), encoding="utf-8")
        code, out, _ = run(capsys, "group", "transversal", "--graph", str(path))
        assert code == 0
        assert out.splitlines() == ["ε", "b"]


class TestExitCodes:
    """Test usage errors exit with 2 and analysis failures with 1."""

    def test_horizon_error(self, capsys):
        code, _, err = run(
            capsys, "code-degree", "--set", "fibonacci", "--horizon", "3", "--code", "a baab bab"
        )
        assert code == 2
        assert "horizon" in err

    def test_unknown_symbol(self, capsys):
        code, _, err = run(capsys, "transform", "--set", "fibonacci", "--code", "aa ab ba", "--pivot", "z")
        assert code == 2
        assert "unknown symbol" in err

    def test_unknown_set(self, capsys):
        code, _, _ = run(capsys, "generate", "--set", "thue-morse")
        assert code == 2

    def test_two_inputs(self, capsys, tmp_path):
        path = tmp_path / "chacon.json"
        path.write_text(json.dumps(CHACON_SPEC), encoding="utf-8")
        code, _, _ = run(capsys, "classify", "--set", "fibonacci", "--morphism", str(path))
        assert code == 2

    @pytest.mark.parametrize(
        "spec, key",
        [
            ({"rules": [["a", "ab"]], "seed": "a"}, "'rules'"),
            ({"alphabet": ["a", "b"], "rules": {"a": 5, "b": ["a"]}, "seed": "a"}, "'a'"),
            ({"alphabet": ["a", "b"], "rules": {"a": "ab", "b": "a"}, "seed": 0}, "'seed'"),
            ({"alphabet": "ab", "rules": {"a": "ab", "b": "a"}, "seed": "a"}, "'alphabet'"),
        ],
    )
    def test_malformed_morphism(self, capsys, tmp_path, spec, key):
        """Test a morphism file of the wrong shape is a usage error naming the key."""
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(spec), encoding="utf-8")
        code, _, err = run(capsys, "classify", "--morphism", str(path), "--up-to", "4")
        assert code == 2
        assert key in err

    def test_returns_without_fixpoint(self, capsys):
        code, _, _ = run(capsys, "returns", "--set", "neutral-not-tree", "--word", "b")
        assert code == 2

    def test_bad_format(self, capsys):
        code, _, _ = run(capsys, "enumerate", "--set", "fibonacci", "--degree", "2", "--max-len", "3", "--format", "dot")
        assert code == 2


class TestCliConfig:
    """Test the resolved request the subcommands read their inputs from."""

    def test_inputs(self):
        config = CliConfig("classify", builtin="fibonacci", morphism_path="chacon.json")
        assert config.inputs == ["set", "morphism"]
        assert CliConfig("group").inputs == []

    @pytest.mark.parametrize(
        "kwargs",
        [{"output_format": "svg"}, {"horizon": 0}, {"code_index": -1}],
    )
    def test_rejected(self, kwargs):
        with pytest.raises(ConfigError):
            CliConfig("code-degree", **kwargs)

    def test_index_routed(self, capsys, tmp_path):
        """Test --index picks the code out of a --code-file list."""
        path = tmp_path / "codes.json"
        codes = [{"words": [["a"]]}, {"words": [["a"], ["b", "a", "b"], ["b", "a", "a", "b"]]}]
        path.write_text(json.dumps({"codes": codes}), encoding="utf-8")
        code, out, _ = run(capsys, "code-degree", "--set", "fibonacci", "--code-file", str(path), "--index", "1")
        assert code == 0
        assert out.strip() == "S-degree 2"
        code, _, _ = run(capsys, "code-degree", "--set", "fibonacci", "--code-file", str(path), "--index", "-1")
        assert code == 2


class TestVerifyCommand:
    """Test the theorem lab from the command line."""

    def test_fibonacci_only(self, capsys, tmp_path):
        path = tmp_path / "lab.json"
        path.write_text(
            json.dumps({"horizon": 32, "enumeration_max_len": 4, "max_degree": 2, "scan_len": 500}),
            encoding="utf-8",
        )
        code, out, _ = run(capsys, "verify", "--config", str(path), "--only", "fibonacci", "--format", "json")
        assert code == 0
        data = json.loads(out)
        assert data["ok"] is True
        assert data["matrix"]["fibonacci"]["class"] == "tree"


if __name__ == "__main__":
    pytest.main([__file__])
