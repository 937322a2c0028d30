import math
from fractions import Fraction

import pytest

from mstcross.density import (bounding_square_side, canonical_cells, density,
                              density_improving_subset, fills_grid)
from mstcross.generators import dense_set, grid_fill_fixture, uniform_square
from mstcross.geom import from_coords


def test_bounding_square_side_is_larger_span():
    ps = from_coords([(0, 0), (10, 1), (3, 4)])
    assert bounding_square_side(ps) == 10


def test_density_of_spread_pair_is_low():
    ps = from_coords([(0, 0), (10, 0)])
    assert density(ps) == Fraction(2, 100)


def test_fills_grid_on_fixture_and_after_removal():
    ps = grid_fill_fixture(4)
    idx = tuple(range(len(ps)))
    assert fills_grid(ps, 4, idx)
    assert not fills_grid(ps, 4, idx[1:])


def test_canonical_cells_covers_subset():
    ps = grid_fill_fixture(5)
    cells = canonical_cells(ps, 5, tuple(range(len(ps))))
    assert len(cells) == 25
    assert sum(len(v) for v in cells.values()) == 25


@pytest.mark.parametrize("k", [2, 3, 4])
def test_density_improving_subset_pigeonhole_count(k):
    ps = uniform_square(120, seed=7)
    subset = tuple(range(120))
    smaller = density_improving_subset(ps, k, subset)
    assert set(smaller) <= set(subset)
    # max-count subsquare of k^2 holds at least ceil(n / k^2) points
    assert len(smaller) >= math.ceil(120 / (k * k))


def test_density_improving_disjunction():
    # either the set fills the k x k grid, or an empty cell upgrades
    # pigeonhole to n/(k^2 - 1) for the densest subsquare
    ps = dense_set(300, alpha="2", seed=2)
    subset = tuple(range(len(ps)))
    for k in (2, 3, 5, 11):
        smaller = density_improving_subset(ps, k, subset)
        assert (fills_grid(ps, k, subset)
                or len(smaller) * (k * k - 1) >= len(subset))


def test_density_improving_subset_improves_density():
    ps = dense_set(300, alpha="2", seed=2)
    subset = tuple(range(len(ps)))
    smaller = density_improving_subset(ps, 2, subset)
    sub_pts = [(ps[i].x, ps[i].y) for i in smaller]
    assert density(from_coords(sub_pts)) >= density(ps)
