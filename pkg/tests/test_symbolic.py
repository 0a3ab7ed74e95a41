"""Tests for rank conditions and minor expansion."""

import pytest
import sympy as sp

from schubert_complexity.exceptions import MinorSizeLimitError
from schubert_complexity.perm_core import parse
from schubert_complexity.symbolic import (
    Polynomial,
    RankCondition,
    block_minors,
    cofactor_det,
    expand_minors,
    fulton_conditions,
    generic_matrix,
    leibniz_det,
    reduce_generators,
    symmetric_matrix,
    variable_name,
)


class TestConditions:
    def test_45231(self, w45231):
        conditions = fulton_conditions(w45231)
        assert [str(c) for c in conditions] == ["r(3,3) <= 2", "r(5,1) <= 0"]
        assert conditions[1].is_linear
        assert conditions[0].rows == [3, 4, 5]
        assert conditions[0].cols == [1, 2, 3]

    def test_variable_names(self):
        assert variable_name("z", 5, 3) == "z53"
        assert variable_name("z", 10, 3) == "z10_3"


class TestDeterminants:
    def test_cofactor_matches_leibniz(self):
        matrix, _ = generic_matrix(4)
        assert sp.expand(cofactor_det(matrix) - leibniz_det(matrix)) == 0

    def test_symmetric_matrix_identifies_entries(self):
        matrix, cells = symmetric_matrix(3)
        assert matrix[2, 0] == matrix[0, 2]
        assert len(cells) == 6


class TestPolynomial:
    def test_normalized_sign_and_order(self):
        z23, z53, z54 = sp.symbols("z23 z53 z54")
        cells = {z23: (2, 3), z53: (5, 3), z54: (5, 4)}
        poly = Polynomial.from_expr(z23 * z54 - z53, cells)
        assert str(poly) == "z53 - z23*z54"
        assert poly == Polynomial.from_expr(z53 - z23 * z54, cells)
        assert poly.degree == 2

    def test_constants(self):
        assert Polynomial.from_expr(sp.Integer(-3), {}).is_unit
        assert Polynomial.from_expr(sp.Integer(0), {}).is_zero


class TestMinors:
    def test_linear_condition_gives_entries(self):
        matrix, cells = generic_matrix(3)
        found = expand_minors(matrix, RankCondition(2, 2, 0, 3), cells)
        assert {str(p) for p in found} == {"z21", "z22", "z31", "z32"}

    def test_size_limit(self):
        matrix, cells = generic_matrix(4)
        with pytest.raises(MinorSizeLimitError):
            block_minors(matrix, [1, 2, 3, 4], [1, 2, 3, 4], 2, cells, size_limit=3)

    def test_minor_larger_than_block_is_empty(self):
        matrix, cells = generic_matrix(3)
        assert block_minors(matrix, [3], [1, 2], 2, cells) == []

    def test_products_of_generators_dropped(self):
        z11, z12, z22 = sp.symbols("z11 z12 z22")
        cells = {z11: (1, 1), z12: (1, 2), z22: (2, 2)}
        polys = [
            Polynomial.from_expr(z11, cells),
            Polynomial.from_expr(z12 - z11 * z22, cells),
            Polynomial.from_expr(z11 * z22, cells),
        ]
        kept = reduce_generators(polys)
        assert [str(p) for p in kept] == ["z11", "z12 - z11*z22"]

    def test_independent_generators_kept(self):
        z23, z52, z53, z54 = sp.symbols("z23 z52 z53 z54")
        cells = {z23: (2, 3), z52: (5, 2), z53: (5, 3), z54: (5, 4)}
        polys = [Polynomial.from_expr(z52, cells), Polynomial.from_expr(z53 - z23 * z54, cells)]
        assert reduce_generators(polys) == polys

    def test_duplicates_and_zero_removed(self):
        z11 = sp.Symbol("z11")
        linear = Polynomial.from_expr(z11, {z11: (1, 1)})
        zero = Polynomial.from_expr(sp.Integer(0), {})
        assert reduce_generators([zero, linear, linear]) == [linear]
