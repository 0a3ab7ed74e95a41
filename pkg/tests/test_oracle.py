"""Tests for the theorem registry and exhaustive sweeps."""

import json

import pytest

from schubert_complexity import bruhat, oracle
from schubert_complexity.config import get_sweep_config
from schubert_complexity.exceptions import UnknownTheoremError
from schubert_complexity.oracle.sweep import _blocks
from schubert_complexity.oracle.theorems import kl_ci_parameters
from schubert_complexity.perm_core import identity, longest, parse

THEOREMS = {
    "toric-equivalence",
    "no-complexity-one",
    "reflection-theorem",
    "bruhat-coherence",
    "chain-independence",
    "kl-chain-complexity",
    "cover-step",
    "pairs-cyclomatic",
    "rectangle",
    "w0t",
    "sym-low-cone",
    "sym-embedding",
    "ci-ms-complexity",
    "kl-ci",
    "rational-mle",
    "length-witnesses",
    "subinterval-toric",
}


class TestRegistry:
    def test_every_theorem_registered(self):
        assert set(oracle.list_theorem_names()) == THEOREMS

    def test_descriptions(self):
        descriptions = oracle.get_theorem_descriptions()
        assert descriptions["rectangle"]["scale"] == "pair"
        assert all(d["description"] for d in descriptions.values())

    def test_unknown_theorem(self):
        with pytest.raises(UnknownTheoremError):
            oracle.get_theorem("four-color")


def test_blocks_cover_the_range():
    tasks = _blocks("length-witnesses", 5, 120, 2, {})
    assert tasks[0][2] == 0
    assert tasks[-1][3] == 120
    assert all(a[3] == b[2] for a, b in zip(tasks, tasks[1:]))


class TestVerify:
    def test_toric_equivalence(self, sweep_config):
        result = oracle.verify("toric-equivalence", sweep_config(4))
        assert result.passed
        assert result.checked == 1 + 2 + 6 + 24
        assert result.report_path is None

    @pytest.mark.parametrize(
        "theorem_id",
        [
            "length-witnesses",
            "no-complexity-one",
            "bruhat-coherence",
            "kl-chain-complexity",
            "chain-independence",
        ],
    )
    def test_small_sweeps_pass(self, theorem_id, sweep_config):
        assert oracle.verify(theorem_id, sweep_config(3)).passed

    def test_process_pool(self, sweep_config):
        result = oracle.verify("length-witnesses", sweep_config(4, jobs=2))
        assert result.passed
        assert result.checked == 33

    def test_report_written_on_request(self, sweep_config, tmp_path):
        result = oracle.verify("length-witnesses", sweep_config(3, write_reports=True))
        data = json.loads((tmp_path / "length-witnesses.json").read_text())
        assert result.report_path == str(tmp_path / "length-witnesses.json")
        assert data["passed"] and data["checked"] == 9

    def test_counterexample_stops_sweep(self, sweep_config, tmp_path, mocker):
        theorem = oracle.get_theorem("no-complexity-one")
        mocker.patch.object(theorem, "check", return_value={"w": "stub"})
        result = oracle.verify("no-complexity-one", sweep_config(4))
        assert not result.passed
        assert result.checked == 1
        assert result.counterexample == {"w": "stub", "n": 1}
        data = json.loads((tmp_path / "no-complexity-one.json").read_text())
        assert data["counterexample"]["w"] == "stub"


class TestChainTheorems:
    def test_exact_by_default(self, mocker):
        spy = mocker.spy(bruhat, "chain_partitions")
        theorem = oracle.get_theorem("chain-independence")
        assert theorem.check(longest(4), {"chain_limit": None}) is None
        assert spy.call_count == len(bruhat.elements(identity(4), longest(4)))

    def test_chain_limit_samples(self, mocker):
        spy = mocker.spy(bruhat, "chain_partitions")
        theorem = oracle.get_theorem("kl-chain-complexity")
        assert theorem.check(parse("3412"), {"chain_limit": 2}) is None
        spy.assert_not_called()

    def test_split_partitions_reported(self, mocker):
        one = frozenset([frozenset([1, 2, 3])])
        two = frozenset([frozenset([1, 2]), frozenset([3])])
        mocker.patch.object(bruhat, "chain_partitions", return_value={one: 3, two: 1})
        found = oracle.get_theorem("chain-independence").check(longest(3), {})
        assert found["partitions"] == [
            {"components": [[1, 2, 3]], "chains": 3},
            {"components": [[1, 2], [3]], "chains": 1},
        ]

    def test_cyclomatic_from_partition(self, mocker):
        connected = frozenset([frozenset([1, 2, 3])])
        mocker.patch.object(bruhat, "chain_partitions", return_value={connected: 4})
        found = oracle.get_theorem("kl-chain-complexity").check(longest(3), {})
        # one step on three vertices in a single component
        assert found["v"] == "231"
        assert found["nu"] == -1
        assert found["complexity"] == 0
        assert found["chains"] == 4


class TestKLCIParameters:
    def test_every_size_up_to_eight(self):
        params = kl_ci_parameters(3)
        assert {p["n"] for p in params} == {4, 5, 6, 7, 8}
        shapes = {(p["k"], p["l"], p["case"]) for p in params if p["n"] == 6}
        assert shapes == {(1, 1, 1), (1, 2, 1), (2, 1, 1), (2, 2, 2)}

    def test_largest_m_has_one_size(self):
        assert {p["n"] for p in kl_ci_parameters(7)} == {8}

    def test_checks_pass_above_m_plus_one(self):
        theorem = oracle.get_theorem("kl-ci")
        for params in kl_ci_parameters(2, n_max=5):
            assert theorem.check(params, {}) is None


class TestRunVerification:
    def test_unknown_id_is_reported(self, sweep_config):
        outcome = oracle.run_verification("four-color", sweep_config(3))
        assert outcome == {"success": False, "error": outcome["error"]}
        assert "four-color" in outcome["error"]

    def test_success(self, sweep_config):
        outcome = oracle.run_verification("length-witnesses", sweep_config(3))
        assert outcome["success"]
        assert outcome["result"]["passed"]


@pytest.mark.slow
@pytest.mark.parametrize("theorem_id", ["toric-equivalence", "no-complexity-one", "rectangle"])
def test_default_ranges(theorem_id, tmp_path):
    config = get_sweep_config(jobs=0)
    config.report_dir = tmp_path
    assert oracle.verify(theorem_id, config).passed
