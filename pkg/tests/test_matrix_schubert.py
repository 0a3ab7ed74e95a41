"""Tests for matrix Schubert varieties and the reflection classification."""

import pytest

from schubert_complexity import matrix_schubert
from schubert_complexity.exceptions import NotToricError, ShapeError
from schubert_complexity.perm_core import all_permutations, identity, longest, parse


class TestAnalyze:
    def test_45231(self, w45231):
        report = matrix_schubert.analyze(w45231)
        assert report.diagram_size == 2
        assert report.dim_x == 23
        assert report.dim_y == 7
        assert report.dim_sigma == 5
        assert report.complexity == 2
        assert not report.toric
        assert not report.toric_by_hooks
        assert not report.toric_by_patterns

    def test_hook_permutation_is_toric(self, hook_w):
        report = matrix_schubert.analyze(hook_w)
        assert report.dim_y == 5
        assert report.complexity == 0
        assert report.toric_by_hooks and report.toric_by_patterns

    def test_trivial_regions(self):
        report = matrix_schubert.analyze(identity(5))
        assert report.dim_y == 0
        assert report.toric
        assert matrix_schubert.analyze(longest(5)).dim_y == 0

    def test_report_serializes(self, w45231):
        data = matrix_schubert.analyze(w45231, sym_low=True).to_dict()
        assert data["complexity"] == 2
        assert data["sym_low"]["complexity"] == data["complexity"] - data["sym_low"]["sw_upper"]

    def test_toric_witnesses_agree_on_s5(self):
        for w in all_permutations(5):
            report = matrix_schubert.analyze(w)
            assert report.toric_by_hooks == report.toric_by_patterns == report.toric, w
            assert report.complexity != 1, w


class TestSymmetric:
    def test_3412_has_symmetric_complexity_one(self):
        block = matrix_schubert.analyze_sym_low(parse("3412"))
        assert block.sw_upper == 1
        assert block.complexity == 1

    def test_embedding(self):
        assert matrix_schubert.embed_for_symmetric(parse("12")) == parse("3421")
        w = matrix_schubert.embed_for_symmetric(parse("21"))
        assert w == longest(4)

    def test_embedding_keeps_complexity(self):
        for word in ("12", "21"):
            v = parse(word)
            block = matrix_schubert.analyze_sym_low(matrix_schubert.embed_for_symmetric(v))
            assert block.sw_upper == 0
            assert block.complexity == matrix_schubert.complexity(v) == 0


class TestReflections:
    def test_scan_agrees_on_hook_permutation(self, hook_w):
        verdicts = matrix_schubert.scan_reflections(hook_w)
        assert [v.m for v in verdicts] == [1, 2, 3, 4, 5]
        assert all(v.agrees for v in verdicts)
        assert all(v.cone_rule_holds is not False for v in verdicts)

    def test_verdict_matches_direct_recomputation(self, hook_w):
        verdict = matrix_schubert.reflection_classify(hook_w, 2)
        moved = hook_w.right_multiply(2, 3)
        assert verdict.actual_toric == matrix_schubert.analyze(moved).toric
        assert verdict.to_dict()["M"] == 2

    def test_non_toric_rejected(self, w45231):
        with pytest.raises(NotToricError):
            matrix_schubert.reflection_classify(w45231, 1)

    def test_column_out_of_range(self, hook_w):
        with pytest.raises(ShapeError):
            matrix_schubert.reflection_classify(hook_w, 6)
