import pytest

from mstcross.crossing import (Coloring, coloring_from_indices, cross_rb,
                               cross_rb_min, longer_edge_crossing_profile)
from mstcross.errors import EmptyColorClass
from mstcross.generators import equidistant_convex_grid, uniform_square
from mstcross.geom import from_coords

# convex quadrilateral, diagonals cross: red diagonal vs blue diagonal
QUAD = from_coords([(0, 0), (10, 1), (9, 11), (-1, 9)])


def test_coloring_validation():
    c = Coloring("RBD")
    assert c.red == (0,) and c.blue == (1,) and c.discarded == (2,)
    with pytest.raises(ValueError):
        Coloring("RXB")
    with pytest.raises(ValueError):
        Coloring("RB\nRB")


def test_coloring_complement_swaps_classes():
    c = Coloring("RRBD")
    assert c.complement().assignment == "BBRD"


def test_coloring_from_indices():
    c = coloring_from_indices(4, red=[0, 2], blue=[1])
    assert c.assignment == "RBRD"
    with pytest.raises(ValueError):
        coloring_from_indices(3, red=[0], blue=[0])


def test_crossing_diagonals_count_one():
    rep = cross_rb(QUAD, Coloring("RBRB"))
    assert rep.count == 1
    assert rep.pairs == (((0, 2), (1, 3)),)
    assert rep.red_tree.edges == ((0, 2),)
    assert rep.blue_tree.edges == ((1, 3),)


def test_same_side_classes_do_not_cross():
    rep = cross_rb(QUAD, Coloring("RRBB"))
    assert rep.count == 0


def test_complement_symmetry():
    ps = uniform_square(9, seed=4)
    c = Coloring("RRBBRBRBB")
    assert cross_rb(ps, c).count == cross_rb(ps, c.complement()).count


def test_discarded_points_are_ignored():
    ps = from_coords([(0, 0), (10, 1), (9, 11), (-1, 9), (100, 100)])
    rep = cross_rb(ps, Coloring("RBRBD"))
    assert rep.count == 1
    assert 4 not in rep.red_tree.vertices
    assert 4 not in rep.blue_tree.vertices


def test_empty_class_raises():
    with pytest.raises(EmptyColorClass):
        cross_rb(QUAD, Coloring("RRRR"))
    with pytest.raises(EmptyColorClass):
        cross_rb(QUAD, Coloring("RRRD"))


def test_cross_rb_min_equals_cross_rb_on_generic():
    ps = uniform_square(8, seed=11)
    c = Coloring("RBRBRBRB")
    assert cross_rb_min(ps, c).count == cross_rb(ps, c).count


def test_cross_rb_min_takes_minimum_over_tied_trees():
    ps, _ = equidistant_convex_grid(6)
    c = Coloring("RBRBRB")
    assert cross_rb_min(ps, c).count <= cross_rb(ps, c).count


def test_longer_edge_crossing_profile_counts_strictly_longer():
    # red horizontal edge of length 20 crossed by a short blue edge:
    # the red edge is longer, so only the blue side sees a longer edge
    ps = from_coords([(-10, 0), (10, 1), (0, 2), (1, -2)])
    rep = cross_rb(ps, Coloring("RRBB"))
    assert rep.count == 1
    max_red, max_blue = longer_edge_crossing_profile(rep)
    assert (max_red, max_blue) == (0, 1)
