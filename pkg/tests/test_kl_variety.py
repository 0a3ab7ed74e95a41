"""Tests for Kazhdan-Lusztig varieties and their complexity formulas."""

import pytest
import sympy as sp

from schubert_complexity import bruhat, kl_variety
from schubert_complexity.exceptions import (
    ChainError,
    ConsistencyError,
    DomainError,
    NotBruhatLeqError,
    NotToricError,
    ShapeError,
    UnexpectedZerosError,
)
from schubert_complexity.graph_kit import cyclomatic
from schubert_complexity.perm_core import all_permutations, diagram_size, identity, longest, parse
from schubert_complexity.symbolic import expand_conditions, fulton_conditions


class TestWorkedPair:
    def test_unexpected_zeros(self, kl_pair):
        assert kl_variety.unexpected_zeros(*kl_pair) == {(5, 2), (5, 3)}

    def test_graph_and_cone(self, kl_pair):
        graph = kl_variety.kl_graph(*kl_pair)
        assert graph.edge_set() == {(1, 2), (4, 5), (2, 5)}
        report = kl_variety.analyze(*kl_pair)
        assert report.dim_n == 3
        assert report.dim_sigma == 3
        assert report.complexity == 0
        assert report.toric
        assert report.analytics is None

    def test_generators(self, kl_pair):
        found = {str(p) for p in kl_variety.generators(*kl_pair)}
        assert found == {"z52", "z53 - z23*z54"}

    def test_z_matrix(self, kl_pair):
        z = kl_variety.z_matrix(kl_pair[0])
        assert z.entry(4, 1) == 1
        assert z.entry(2, 3) == "z23"
        assert z.entry(1, 1) == 0
        assert "z54" in str(z)

    def test_not_below(self, kl_pair):
        v, w = kl_pair
        with pytest.raises(NotBruhatLeqError):
            kl_variety.analyze(w, v)


class TestPairAnalytics:
    def test_58672341(self):
        v = parse("58672341")
        assert kl_variety.cv(v) == {(4, 5), (8, 1)}
        assert kl_variety.av(v) == {8}
        assert len(kl_variety.bar_graph(v).edges) == 7
        assert kl_variety.pairs(v) == [((3, 5), (4, 6)), ((6, 1), (7, 3))]
        analytics = kl_variety.no_unexpected_zero_analytics(v, longest(8))
        assert analytics.nu == 2
        assert analytics.dim_sigma == 5
        assert analytics.complexity == 2

    def test_actual_nonzero_coordinates_can_be_waived(self):
        v, w = parse("423516"), parse("642351")
        zeros = kl_variety.unexpected_zeros(v, w)
        assert (6, 3) in zeros
        with pytest.raises(UnexpectedZerosError):
            kl_variety.no_unexpected_zero_analytics(v, w)
        analytics = kl_variety.no_unexpected_zero_analytics(v, w, assume_no_actual_zeros=True)
        assert len(analytics.pairs) == 4
        assert analytics.nu == 4
        assert analytics.dim_sigma == 5
        assert analytics.complexity == 0

    def test_wrong_waiver_caught_by_cross_check(self):
        # z65 vanishes on N_{v,w} here, so the pair count gives 4 - 5 = -1
        v, w = parse("423516"), parse("642315")
        assert (6, 5) in kl_variety.unexpected_zeros(v, w)
        assert kl_variety.complexity(v, w) == 0
        with pytest.raises(ConsistencyError, match="-1"):
            kl_variety.no_unexpected_zero_analytics(v, w, assume_no_actual_zeros=True)

    def test_pair_count_cross_checked_against_graph(self, mocker):
        mocker.patch.object(kl_variety, "complexity", return_value=0)
        with pytest.raises(ConsistencyError):
            kl_variety.no_unexpected_zero_analytics(identity(3), longest(3))

    def test_tie_order_does_not_change_pairs(self):
        for v in all_permutations(5):
            forward = kl_variety.pairs(v)
            backward = kl_variety.pairs(v, reverse_ties=True)
            assert sorted(forward) == sorted(backward)

    def test_pair_count_gives_complexity_above_v(self):
        v = parse("2143")
        size = len(kl_variety.pairs(v))
        checked = 0
        for w in bruhat.elements(v, longest(4)):
            if kl_variety.unexpected_zeros(v, w):
                continue
            assert size - diagram_size(w) == kl_variety.complexity(v, w)
            checked += 1
        assert checked > 1

    def test_423516_binomials(self):
        v, w = parse("423516"), parse("642351")
        report = kl_variety.analyze(v, w, with_generators=True)
        assert report.complexity == 0
        found = {str(p) for p in report.generators}
        assert found == {"z52 - z32*z53", "z61 - z51*z64", "z62 - z52*z64", "z63 - z53*z64"}

    def test_reduced_generators_span_the_minors(self):
        v, w = parse("423516"), parse("642351")
        matrix, cells = kl_variety.z_matrix(v).to_sympy()
        minors = expand_conditions(matrix, fulton_conditions(w), cells)
        reduced = kl_variety.generators(v, w)
        assert len(reduced) < len(minors)
        symbols = sorted(cells, key=lambda s: cells[s])
        basis = sp.groebner([p.to_expr() for p in reduced], *symbols, order="grevlex")
        assert all(basis.contains(p.to_expr()) for p in minors)

    def test_identity_pairs(self):
        v = identity(3)
        assert kl_variety.pairs(v) == [((2, 1), (3, 2))]
        analytics = kl_variety.no_unexpected_zero_analytics(v, longest(3))
        assert analytics.corners == {(3, 1)}
        assert analytics.antidiagonal == frozenset()


class TestIntervalToolkit:
    def test_components(self, toric_interval):
        assert kl_variety.toric_components(*toric_interval) == [[1, 2, 3, 4], [5]]
        assert kl_variety.moved(*toric_interval) == [1, 2, 3, 4]

    def test_extension_inside_a_component(self, toric_interval):
        verdict = kl_variety.extend(*toric_interval, parse("42315"))
        assert verdict.transposition == (2, 4)
        assert not verdict.predicted_toric
        assert verdict.complexity == 1
        assert verdict.agrees

    def test_extension_across_components(self, toric_interval):
        verdict = kl_variety.extend(*toric_interval, parse("41352"))
        assert verdict.transposition == (4, 5)
        assert verdict.predicted_toric
        assert verdict.complexity == 0

    def test_extension_needs_a_cover(self, toric_interval):
        with pytest.raises(ChainError):
            kl_variety.extend(*toric_interval, longest(5))

    def test_non_toric_interval(self):
        with pytest.raises(NotToricError):
            kl_variety.toric_components(identity(4), longest(4))

    def test_glue_trivial_lower_interval(self, toric_interval):
        v, w = toric_interval
        verdict = kl_variety.glue(v, v, w)
        assert verdict.predicted_toric
        assert verdict.agrees


class TestFormulas:
    def test_rectangle_at_rank(self):
        result = kl_variety.rectangle_complexity(identity(4), parse("2143"))
        assert result.case == "at-rank"
        assert result.formula == result.direct == 0

    def test_rectangle_needs_one_rectangle(self):
        with pytest.raises(ShapeError):
            kl_variety.rectangle_complexity(identity(4), parse("3412"))

    def test_w0t(self):
        assert kl_variety.w0t(4, 1, 2) == parse("3421")
        with pytest.raises(ShapeError):
            kl_variety.w0t(4, 2, 2)

    def test_w0t_complexity_agrees(self):
        for v in (identity(4), parse("2143"), parse("1324")):
            assert kl_variety.w0t_complexity(v, 1, 2).agrees

    def test_complexity_range(self):
        assert kl_variety.complexity_range(n=5) == (0, 6)
        assert kl_variety.complexity_range(v=identity(4)) == (0, 3)
        assert kl_variety.complexity_range(w=longest(4)) == (0, 3)
        with pytest.raises(DomainError):
            kl_variety.complexity_range(n=4, v=identity(4))

    def test_identity_to_longest(self):
        n = 5
        assert kl_variety.complexity(identity(n), longest(n)) == (n - 1) * (n - 2) // 2
        assert cyclomatic(kl_variety.kl_graph(identity(n), longest(n))) == 6
