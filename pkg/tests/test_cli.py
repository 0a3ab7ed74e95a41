"""Tests for the command line surface."""

import json

import pytest

from schubert_complexity.cli import build_parser, run


def run_json(capsys, *argv):
    assert run([*argv, "--json"]) == 0
    return json.loads(capsys.readouterr().out)


class TestMatrixSchubert:
    def test_analyze_json(self, capsys):
        data = run_json(capsys, "ms", "analyze", "45231")
        assert data["command"] == ["ms", "analyze"]
        assert data["inputs"] == ["45231"]
        assert data["payload"]["complexity"] == 2
        assert data["payload"]["dim_Y"] == 7

    def test_analyze_text_with_picture(self, capsys):
        assert run(["ms", "analyze", "45231", "--ascii"]) == 0
        out = capsys.readouterr().out
        assert ". . . . 1" in out
        assert "complexity: 2" in out

    def test_diagram(self, capsys):
        data = run_json(capsys, "ms", "diagram", "45231")
        assert data["payload"]["cells"] == [[3, 3], [5, 1]]

    def test_dot(self, capsys):
        assert run(["ms", "analyze", "251346", "--dot"]) == 0
        assert "->" in capsys.readouterr().out

    def test_reflect_non_toric_is_domain_error(self, capsys):
        assert run(["ms", "reflect", "45231", "1"]) == 1
        assert "error:" in capsys.readouterr().err


class TestUsageErrors:
    @pytest.mark.parametrize("word", ["1224", "12a", "0123"])
    def test_bad_permutation(self, word, capsys):
        assert run(["ms", "analyze", word]) == 2

    def test_missing_command(self, capsys):
        assert run([]) == 2

    def test_range_needs_exactly_one_constraint(self, capsys):
        assert run(["kl", "range"]) == 2
        assert run(["kl", "range", "--n", "4", "--v", "1234"]) == 2


class TestKazhdanLusztig:
    def test_analyze_with_generators(self, capsys):
        assert run(["kl", "analyze", "43125", "53412"]) == 0
        out = capsys.readouterr().out
        assert "complexity: 0" in out
        assert "z53 - z23*z54" in out

    def test_analyze_skip_generators(self, capsys):
        data = run_json(capsys, "kl", "analyze", "43125", "53412", "--no-generators")
        assert data["payload"]["generators"] is None
        assert data["payload"]["dim_N"] == 3

    def test_not_below(self, capsys):
        assert run(["kl", "analyze", "21345", "12345"]) == 1

    def test_range(self, capsys):
        data = run_json(capsys, "kl", "range", "--n", "5")
        assert data["payload"] == {"n": 5, "range": [0, 6]}

    def test_w0t(self, capsys):
        data = run_json(capsys, "kl", "w0t", "1234", "1", "2")
        assert data["inputs"] == ["1234", "3421"]


class TestBruhat:
    def test_leq(self, capsys):
        assert run(["bruhat", "leq", "12345", "45231"]) == 0
        assert capsys.readouterr().out.strip() == "true"

    def test_chains(self, capsys):
        data = run_json(capsys, "bruhat", "chains", "123", "321")
        assert len(data["payload"]["chains"]) == 4
        assert len(data["payload"]["elements"]) == 6


class TestStatistics:
    def test_ci_realize(self, capsys):
        data = run_json(capsys, "stat", "ci-realize", "4", "1", "3,4")
        assert data["payload"]["w"] == "2431"
        assert data["payload"]["complexity"] == 0

    def test_ci_unrealizable(self, capsys):
        data = run_json(capsys, "stat", "ci-realize", "4", "2", "4")
        assert data["payload"]["w"] is None

    def test_mle(self, capsys):
        assert run(["stat", "mle", "251346"]) == 0
        assert capsys.readouterr().out.strip() == "true"


class TestOracle:
    def test_list(self, capsys):
        assert run(["oracle", "list"]) == 0
        out = capsys.readouterr().out
        assert "toric-equivalence" in out
        assert "subinterval-toric" in out

    def test_verify_writes_report(self, capsys, tmp_path):
        code = run(
            ["oracle", "verify", "length-witnesses", "--n", "4", "--jobs", "1", "--out", str(tmp_path)]
        )
        assert code == 0
        assert "passed" in capsys.readouterr().out
        assert json.loads((tmp_path / "length-witnesses.json").read_text())["checked"] == 33

    def test_unknown_theorem(self, capsys):
        assert run(["oracle", "verify", "four-color", "--n", "3", "--jobs", "1"]) == 1


def test_every_leaf_accepts_output_flags():
    args = build_parser().parse_args(["bruhat", "atoms", "123", "321", "--dot", "--log-level", "DEBUG"])
    assert args.dot and args.log_level == "DEBUG"
