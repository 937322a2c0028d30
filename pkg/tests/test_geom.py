from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mstcross.errors import DegenerateIntersection
from mstcross.geom import (Genericity, PointSet, convex_hull, format_pointset,
                           frac, from_coords, in_convex_position, is_generic,
                           orientation, parse_pointset, pt,
                           segments_properly_cross, squared_distance)

coords = st.fractions(min_value=-100, max_value=100, max_denominator=1 << 12)


def test_orientation_known_turns():
    a, b = pt(0, 0), pt(2, 0)
    assert orientation(a, b, pt(1, 1)) == 1
    assert orientation(a, b, pt(1, -1)) == -1
    assert orientation(a, b, pt(3, 0)) == 0


@given(coords, coords, coords, coords, coords, coords)
def test_orientation_antisymmetry(ax, ay, bx, by, cx, cy):
    a, b, c = pt(ax, ay), pt(bx, by), pt(cx, cy)
    assert orientation(a, b, c) == -orientation(a, c, b)
    assert orientation(a, b, c) == orientation(b, c, a)


@given(coords, coords, coords, coords, coords, coords, coords, coords,
       st.integers(min_value=1, max_value=50))
def test_orientation_translation_scale_invariance(ax, ay, bx, by, cx, cy,
                                                  tx, ty, s):
    a, b, c = pt(ax, ay), pt(bx, by), pt(cx, cy)
    moved = [pt(p.x * s + tx, p.y * s + ty) for p in (a, b, c)]
    assert orientation(a, b, c) == orientation(*moved)


@given(coords, coords, coords, coords)
def test_squared_distance_symmetric_positive(ax, ay, bx, by):
    a, b = pt(ax, ay), pt(bx, by)
    d = squared_distance(a, b)
    assert d == squared_distance(b, a)
    assert d >= 0
    assert (d == 0) == (a.x == b.x and a.y == b.y)


def test_proper_crossing_basic():
    assert segments_properly_cross((pt(0, 0), pt(2, 2)), (pt(0, 2), pt(2, 0)))
    assert not segments_properly_cross((pt(0, 0), pt(1, 0)),
                                       (pt(2, 0), pt(3, 1)))
    # sharing an endpoint is not a proper crossing
    assert not segments_properly_cross((pt(0, 0), pt(2, 2)),
                                       (pt(0, 0), pt(2, 0)))


def test_endpoint_on_interior_is_degenerate():
    with pytest.raises(DegenerateIntersection):
        segments_properly_cross((pt(0, 0), pt(2, 0)), (pt(1, 0), pt(1, 1)))


def test_collinear_overlap_is_degenerate():
    with pytest.raises(DegenerateIntersection):
        segments_properly_cross((pt(0, 0), pt(2, 0)), (pt(1, 0), pt(3, 0)))


def test_convex_hull_square_with_interior_point():
    ps = from_coords([(0, 0), (4, 0), (4, 4), (0, 4), (2, 1)])
    hull = convex_hull(ps)
    assert sorted(hull) == [0, 1, 2, 3]
    assert not in_convex_position(ps)
    assert in_convex_position(from_coords([(0, 0), (4, 0), (4, 4), (0, 4)]))


def test_is_generic_flags_collinear_triple():
    # triple on y = x, all six pairwise distances distinct
    ps = from_coords([(0, 0), (1, 1), (4, 4), (9, 2)])
    g = is_generic(ps)
    assert not g.ok and g.kind == "collinear"
    assert g.collinear is not None
    a, b, c = g.collinear
    assert orientation(ps[a], ps[b], ps[c]) == 0


def test_is_generic_flags_repeated_distance():
    # unit square: all four sides share the same length
    g = is_generic(from_coords([(0, 0), (1, 0), (1, 1), (0, 1)]))
    assert not g.ok and g.kind == "repeated-distance"
    assert g.pairs is not None
    (i, j), (k, l) = g.pairs
    ps = from_coords([(0, 0), (1, 0), (1, 1), (0, 1)])
    assert squared_distance(ps[i], ps[j]) == squared_distance(ps[k], ps[l])


def test_is_generic_accepts_scalene():
    assert is_generic(from_coords([(0, 0), (7, 1), (3, 5)])).ok


def test_pointset_rejects_duplicates_and_bad_labels():
    with pytest.raises(ValueError):
        from_coords([(0, 0), (0, 0)])
    with pytest.raises(ValueError):
        PointSet([pt(0, 0), pt(1, 0)], labels=["a"])


def test_frac_accepts_strings_and_ints():
    assert frac("3/7") == Fraction(3, 7)
    assert frac(2) == Fraction(2)


@given(st.lists(st.tuples(coords, coords), min_size=1, max_size=12,
                unique=True))
def test_text_format_round_trip(pairs):
    ps = from_coords(pairs)
    again = parse_pointset(format_pointset(ps))
    assert [(p.x, p.y) for p in again] == [(p.x, p.y) for p in ps]


def test_parse_pointset_rejects_malformed():
    with pytest.raises(ValueError):
        parse_pointset("")
    with pytest.raises(ValueError):
        parse_pointset("2\n0 0\n")
    with pytest.raises(ValueError):
        parse_pointset("1\n0 0 0\n")
    with pytest.raises(ValueError):
        parse_pointset("x\n0 0\n")


def test_parse_pointset_skips_comments():
    ps = parse_pointset("# header\n2\n0 0\n# middle\n1/2 -3/4\n")
    assert len(ps) == 2
    assert ps[1].x == Fraction(1, 2) and ps[1].y == Fraction(-3, 4)
