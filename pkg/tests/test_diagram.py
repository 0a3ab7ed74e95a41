"""Tests for diagrams, regions and hook decompositions."""

from schubert_complexity.diagram import (
    Diagram,
    Hook,
    components,
    essential_set,
    hook_decomposition,
    hooks_of,
    opposite_rothe,
    regions,
    render_ascii,
    south_west_of,
    sw_corners,
)
from schubert_complexity.perm_core import identity, longest, parse


class TestOppositeRothe:
    def test_45231(self, w45231):
        d = opposite_rothe(w45231)
        assert d.cells == {(3, 3), (5, 1)}
        assert essential_set(d) == {(3, 3), (5, 1)}

    def test_identity_and_longest(self):
        assert len(opposite_rothe(identity(4))) == 6
        assert len(opposite_rothe(longest(4))) == 0

    def test_components_are_edge_connected(self, hook_w):
        parts = components(opposite_rothe(hook_w))
        assert len(parts) == 2
        assert (6, 1) in parts[0]
        assert parts[1].cells == {(3, 3), (4, 3), (4, 4)}

    def test_sw_corners(self):
        v = parse("58672341")
        assert sw_corners(opposite_rothe(v)) == {(4, 5), (8, 1)}


class TestRegions:
    def test_45231(self, w45231):
        reg = regions(w45231)
        assert reg.dom.cells == {(5, 1)}
        assert len(reg.sw) == 9
        assert len(reg.l) == 8
        assert len(reg.lprime) == 7

    def test_dom_is_the_corner_component(self):
        reg = regions(parse("3412"))
        assert (4, 1) in reg.diagram
        assert reg.dom.cells == {(4, 1)}
        reg = regions(parse("2431"))
        assert (4, 1) in reg.dom

    def test_south_west_of(self):
        assert south_west_of(3, [(2, 2)]).cells == {(2, 1), (2, 2), (3, 1), (3, 2)}


class TestHooks:
    def test_single_hook(self, hook_w):
        structure = hook_decomposition(hook_w)
        assert structure is not None
        assert structure.hooks == (Hook((5, 2), 3, 3),)
        assert structure.label(2).kind == "hook"

    def test_hook_cells(self):
        hook = Hook((5, 2), 3, 3)
        assert hook.top == 3
        assert hook.right == 4
        assert hook.cells == {(3, 2), (4, 2), (5, 2), (5, 3), (5, 4)}

    def test_non_toric_has_no_decomposition(self, w45231):
        assert hook_decomposition(w45231) is None

    def test_square_is_not_a_hook(self):
        square = Diagram(3, frozenset({(1, 1), (1, 2), (2, 1), (2, 2)}))
        assert hooks_of(square) is None

    def test_every_column_labelled(self, hook_w):
        structure = hook_decomposition(hook_w)
        kinds = {structure.label(c).kind for c in range(1, 7)}
        assert "unlabeled" not in kinds
        assert str(structure.label(2)) == "h_1"


class TestRender:
    def test_45231_picture(self, w45231):
        rows = render_ascii(w45231).splitlines()
        assert rows[0] == ". . . . 1"
        assert rows[2] == "+ + * 1 ."
        assert rows[4] == "* 1 + . ."
