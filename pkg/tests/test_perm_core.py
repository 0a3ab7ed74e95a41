"""Tests for permutations, ranks and enumeration."""

from math import factorial

import pytest

from schubert_complexity.exceptions import (
    PermutationParseError,
    ShapeError,
    SizeMismatchError,
)
from schubert_complexity.perm_core import (
    TORIC_PATTERNS,
    Permutation,
    all_permutations,
    avoids,
    compose,
    contains_pattern,
    coxeter_length,
    diagram_size,
    identity,
    lex_rank,
    lex_unrank,
    longest,
    parse,
    permutations_between,
    product,
    rank,
    rank_table,
    reduced_word,
    simple,
    transposition,
)


class TestParse:
    def test_digit_and_comma_forms_agree(self):
        assert parse("45231") == parse("4,5,2,3,1") == Permutation((4, 5, 2, 3, 1))

    def test_large_n_uses_commas(self):
        w = parse("10,9,8,7,6,5,4,3,2,1")
        assert w.n == 10
        assert str(w) == "10,9,8,7,6,5,4,3,2,1"

    @pytest.mark.parametrize(
        "text, position",
        [("4523x", 5), ("4,5,0,3,1", 3), ("1231", 4), ("", 1), ("126", 3)],
    )
    def test_errors_carry_position(self, text, position):
        with pytest.raises(PermutationParseError) as info:
            parse(text)
        assert info.value.position == position
        assert info.value.exit_code == 2

    def test_constructor_rejects_non_permutations(self):
        with pytest.raises(ShapeError):
            Permutation((1, 1, 2))


class TestProducts:
    def test_right_multiply_swaps_positions(self):
        assert parse("45231").right_multiply(1, 3) == parse("25431")

    def test_left_multiply_swaps_values(self):
        assert parse("45231").left_multiply(1, 5) == parse("41235")

    def test_inverse(self, w45231):
        assert compose(w45231, w45231.inverse()) == identity(5)
        assert w45231.inverse() == parse("53412")

    def test_compose_size_mismatch(self):
        with pytest.raises(SizeMismatchError):
            compose(identity(3), identity(4))

    def test_transposition_and_simple(self):
        assert transposition(1, 3, 3) == parse("321")
        assert simple(2, 4) == parse("1324")


class TestRanks:
    def test_rank_counts_south_west_ones(self, w45231):
        # entries >= 3 among w(1), w(2), w(3) = 4, 5, 2
        assert rank(w45231, 3, 3) == 2
        assert w45231.rank(5, 1) == 0

    def test_rank_table_matches_rank(self, w45231):
        table = rank_table(w45231)
        for a in range(1, 6):
            for b in range(1, 6):
                assert table[a - 1][b - 1] == rank(w45231, a, b)

    def test_rank_outside_grid(self, w45231):
        with pytest.raises(ShapeError):
            rank(w45231, 0, 2)


class TestLength:
    def test_length_witnesses_agree(self, w45231):
        assert w45231.length == 8
        assert diagram_size(w45231) == 2
        assert coxeter_length(w45231) == (8, 8)

    def test_extremes(self):
        assert identity(5).length == 0
        assert longest(5).length == 10
        assert diagram_size(longest(5)) == 0

    @pytest.mark.parametrize("text", ["1", "21", "45231", "251346", "58672341"])
    def test_reduced_word_multiplies_back(self, text):
        w = parse(text)
        word = reduced_word(w)
        assert len(word) == w.length
        assert product((simple(i, w.n) for i in word), w.n) == w


class TestPatterns:
    def test_45231_contains_3412(self, w45231):
        assert contains_pattern(w45231, parse("3412"))
        assert not avoids(w45231, *TORIC_PATTERNS)

    def test_hook_permutation_avoids_both(self, hook_w):
        assert avoids(hook_w, *TORIC_PATTERNS)

    def test_pattern_longer_than_word(self):
        assert not contains_pattern(parse("21"), parse("321"))


class TestEnumeration:
    def test_lexicographic_order(self):
        words = [str(w) for w in all_permutations(3)]
        assert words == ["123", "132", "213", "231", "312", "321"]

    def test_rank_unrank(self):
        assert lex_rank(parse("123")) == 0
        assert lex_rank(parse("321")) == 5
        assert lex_unrank(4, 23) == longest(4)
        assert all(lex_rank(lex_unrank(4, k)) == k for k in range(factorial(4)))

    def test_blocks_cover_s4_once(self):
        blocks = [list(permutations_between(4, s, min(s + 5, 24))) for s in range(0, 24, 5)]
        flat = [w for block in blocks for w in block]
        assert flat == list(all_permutations(4))

    def test_empty_block(self):
        assert list(permutations_between(4, 3, 3)) == []
