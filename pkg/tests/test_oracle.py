import itertools
from fractions import Fraction

import pytest

from mstcross.crossing import Coloring, cross_rb
from mstcross.errors import NonGenericInput, TooLarge
from mstcross.generators import (equidistant_convex_grid,
                                 perturbed_regular_polygon, uniform_square)
from mstcross.geom import from_coords, squared_distance
from mstcross.oracle import (brute_force_mst_weight, exact_cross_number,
                             exact_cross_number_nongeneric,
                             search_zero_cross_5set)
from mstcross.spanning import mst


def test_three_points_never_cross():
    ps = from_coords([(0, 0), (7, 1), (3, 5)])
    assert exact_cross_number(ps).value == 0


def test_convex_four_set_is_one_and_witness_is_argmax():
    ps = perturbed_regular_polygon(4, seed=2)
    result = exact_cross_number(ps)
    assert result.value == 1
    assert result.colorings == 7  # 2^(4-1) - 1 two-class colorings
    # independent enumeration of every coloring with both classes
    best = 0
    for mask in range(1, 15):
        c = Coloring("".join("R" if mask & (1 << i) else "B"
                             for i in range(4)))
        best = max(best, cross_rb(ps, c).count)
    assert best == result.value
    assert cross_rb(ps, result.witness).count == result.value


def test_oracle_respects_reflections():
    ps = uniform_square(7, seed=13)
    value = exact_cross_number(ps).value
    mirrored = from_coords([(-p.x, p.y) for p in ps])
    swapped = from_coords([(p.y, p.x) for p in ps])
    assert exact_cross_number(mirrored).value == value
    assert exact_cross_number(swapped).value == value


def test_oracle_parallel_matches_serial():
    ps = uniform_square(9, seed=21)
    serial = exact_cross_number(ps, workers=1)
    parallel = exact_cross_number(ps, workers=2)
    assert serial.value == parallel.value
    assert serial.witness == parallel.witness


def test_oracle_guards():
    with pytest.raises(TooLarge):
        exact_cross_number(uniform_square(8, seed=0), max_n=7)
    with pytest.raises(NonGenericInput):
        exact_cross_number(from_coords([(0, 0), (1, 1), (4, 4), (9, 2)]))


def test_nongeneric_matches_generic_on_generic_input():
    ps = uniform_square(7, seed=3)
    assert (exact_cross_number_nongeneric(ps).value
            == exact_cross_number(ps).value)


@pytest.mark.parametrize("n,bound", [(4, 1), (6, 2)])
def test_nongeneric_equidistant_bound(n, bound):
    ps, _ = equidistant_convex_grid(n)
    assert exact_cross_number_nongeneric(ps).value <= bound


def test_every_seed_small_generic_set_crosses():
    # crossing number of any generic set with more than 5 points is >= 1
    for seed in range(10):
        ps = uniform_square(6, seed=seed)
        assert exact_cross_number(ps).value >= 1


def test_brute_force_tree_agrees_with_kruskal():
    # generic sets have a unique MST, so the exhaustive search over all
    # m^(m-2) labelled trees must land on the same edge set as Kruskal
    for seed in range(12):
        ps = uniform_square(7, seed=100 + seed)
        assert brute_force_mst_weight(ps).edges == mst(ps).edges


def test_brute_force_on_subset():
    ps = uniform_square(9, seed=5)
    subset = [0, 2, 4, 6, 8]
    brute = brute_force_mst_weight(ps, subset)
    assert brute.vertices == tuple(subset)
    assert brute.edges == mst(ps, subset=subset).edges


def test_brute_force_single_edge():
    ps = from_coords([(0, 0), (3, 4)])
    tree = brute_force_mst_weight(ps)
    assert tree.edges == ((0, 1),)
    assert squared_distance(ps[0], ps[1]) == 25


def test_brute_force_size_guard():
    with pytest.raises(TooLarge):
        brute_force_mst_weight(uniform_square(9, seed=0))


def test_zero_cross_search_seed0_witness():
    ps, trials = search_zero_cross_5set(seed=0)
    assert trials >= 1
    assert exact_cross_number(ps).value == 0
    # removing the apex (the last point) forces a crossing
    base = from_coords([(p.x, p.y) for p in ps.points[:4]])
    assert exact_cross_number(base).value == 1
