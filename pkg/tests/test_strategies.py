import itertools

import pytest

from mstcross.crossing import BLUE, DISCARDED, RED, cross_rb
from mstcross.errors import (DoesNotFill, NotConvexPosition, NotFlat,
                             NotLabeledGrid, TooFewPoints)
from mstcross.generators import (dense_set, flat_convex_set,
                                 grid_fill_fixture, island_fixture,
                                 perturbed_grid_p0, perturbed_regular_polygon,
                                 uniform_square)
from mstcross.geom import from_coords, in_convex_position
from mstcross.strategies import (alternate_convex, dense_coloring,
                                 flat_convex_coloring, grid_fill_coloring,
                                 grid_five_eighths_coloring,
                                 island_wedge_coloring, largest_convex_subset,
                                 one_crossing_coloring, random_coloring)


def realized(ps, coloring) -> int:
    return cross_rb(ps, coloring).count


class TestAlternateConvex:
    @pytest.mark.parametrize("n", [4, 5, 8, 13, 20])
    def test_guarantee_formula_and_realization(self, n):
        ps = perturbed_regular_polygon(n, seed=n)
        out = alternate_convex(ps)
        assert out.guarantee == n // 2 - 1
        assert realized(ps, out.coloring) >= out.guarantee

    def test_odd_n_gives_red_the_extra_point(self):
        ps = perturbed_regular_polygon(7, seed=1)
        c = alternate_convex(ps).coloring.assignment
        assert c.count(RED) == 4 and c.count(BLUE) == 3

    def test_rejects_too_few_and_non_convex(self):
        with pytest.raises(TooFewPoints):
            alternate_convex(from_coords([(0, 0), (5, 1)]))
        with pytest.raises(NotConvexPosition):
            alternate_convex(from_coords(
                [(0, 0), (10, 1), (9, 11), (-1, 9), (5, 5)]))


class TestFlatConvex:
    @pytest.mark.parametrize("n", [4, 7, 10, 14])
    def test_realizes_exactly_n_minus_3(self, n):
        ps = flat_convex_set(n, seed=n)
        out = flat_convex_coloring(ps)
        assert out.guarantee == n - 3
        assert realized(ps, out.coloring) == n - 3

    def test_endpoints_of_the_rule(self):
        ps = flat_convex_set(8, seed=0)
        chars = flat_convex_coloring(ps).coloring.assignment
        order = sorted(range(8), key=lambda i: (ps[i].x, ps[i].y))
        assert chars[order[0]] == RED
        assert chars[order[1]] == BLUE
        assert chars[order[-1]] != chars[order[-2]]

    def test_rejects_non_flat_convex_set(self):
        with pytest.raises(NotFlat):
            flat_convex_coloring(perturbed_regular_polygon(8, seed=0))

    def test_rejects_too_few(self):
        with pytest.raises(TooFewPoints):
            flat_convex_coloring(from_coords([(0, 0), (7, 1), (3, 5)]))


class TestOneCrossing:
    @pytest.mark.parametrize("seed", range(25))
    def test_always_forces_a_crossing(self, seed):
        ps = uniform_square(6 + seed % 3, seed=300 + seed)
        out = one_crossing_coloring(ps)
        assert out.guarantee == 1
        # two reds when the hull has a spare pair, three in the apex cases
        assert out.coloring.assignment.count(RED) in (2, 3)
        assert realized(ps, out.coloring) >= 1

    def test_rejects_five_points(self):
        with pytest.raises(TooFewPoints):
            one_crossing_coloring(uniform_square(5, seed=0))


class TestLargestConvexSubset:
    @pytest.mark.parametrize("seed", range(8))
    def test_matches_exhaustive_search(self, seed):
        ps = uniform_square(8, seed=700 + seed)
        found = largest_convex_subset(ps)
        sub = from_coords([(ps[i].x, ps[i].y) for i in found])
        assert in_convex_position(sub)
        best = 0
        for size in range(len(ps), 2, -1):
            for combo in itertools.combinations(range(len(ps)), size):
                cand = from_coords([(ps[i].x, ps[i].y) for i in combo])
                if in_convex_position(cand):
                    best = size
                    break
            if best:
                break
        assert len(found) == best

    def test_tiny_inputs_pass_through(self):
        ps = from_coords([(0, 0), (5, 1)])
        assert largest_convex_subset(ps) == (0, 1)

    def test_subset_argument_restricts_the_pool(self):
        ps = uniform_square(9, seed=11)
        pool = [0, 2, 4, 6]
        found = largest_convex_subset(ps, pool)
        assert set(found) <= set(pool)


class TestIslandWedge:
    def test_stages_alternate_and_back_the_guarantee(self):
        ps = island_fixture(40, 40, seed=7)
        out = island_wedge_coloring(ps)
        chars = out.coloring.assignment
        assert out.stages
        assert out.guarantee == sum(len(st) // 2 - 1 for st in out.stages)
        for st in out.stages:
            assert len(st) >= 4
            for t, i in enumerate(st):
                assert chars[i] == (RED if t % 2 == 0 else BLUE)
        colored = {i for st in out.stages for i in st}
        for i in range(len(ps)):
            if i not in colored:
                assert chars[i] in (DISCARDED, RED, BLUE)
        assert realized(ps, out.coloring) >= out.guarantee

    def test_two_group_fixture_runs_two_stages(self):
        ps = island_fixture(60, 60, seed=1)
        out = island_wedge_coloring(ps)
        assert len(out.stages) >= 2

    def test_parameter_validation(self):
        ps = island_fixture(10, 10, seed=0)
        with pytest.raises(ValueError):
            island_wedge_coloring(ps, wedge_count=0)
        with pytest.raises(ValueError):
            island_wedge_coloring(ps, radius_factor="1")


class TestGridFiveEighths:
    @pytest.mark.parametrize("n", [4, 6, 8, 10, 12])
    def test_guarantee_formula(self, n):
        ps, _ = perturbed_grid_p0(n)
        out = grid_five_eighths_coloring(ps)
        assert out.guarantee == (5 * (n - 2)) // 8
        assert realized(ps, out.coloring) >= out.guarantee

    def test_rejects_unlabeled_points(self):
        with pytest.raises(NotLabeledGrid):
            grid_five_eighths_coloring(uniform_square(8, seed=0))


class TestGridFill:
    def test_fixture_earns_its_crossing(self):
        ps = grid_fill_fixture(11)
        out = grid_fill_coloring(ps, inner=range(len(ps)), k=11)
        chars = out.coloring.assignment
        assert chars.count(RED) == 2
        assert out.guarantee == 1
        assert realized(ps, out.coloring) >= 1

    def test_rejects_non_filling_subset(self):
        ps = grid_fill_fixture(11)
        with pytest.raises(DoesNotFill):
            grid_fill_coloring(ps, inner=range(20), k=11)

    def test_rejects_bad_k(self):
        ps = grid_fill_fixture(11)
        with pytest.raises(ValueError):
            grid_fill_coloring(ps, inner=range(len(ps)), k=10)


class TestDense:
    def test_guarantee_is_realized(self):
        ps = dense_set(900, seed=3)
        out = dense_coloring(ps, alpha="2", r=60, k=11)
        assert out.guarantee >= 1
        assert realized(ps, out.coloring) >= out.guarantee
        assert out.coloring.assignment.count(RED) == 2 * out.guarantee

    def test_rejects_sparse_input(self):
        with pytest.raises(ValueError):
            dense_coloring(uniform_square(50, seed=0), alpha="2")


class TestRandomColoring:
    def test_deterministic_and_well_formed(self):
        ps = uniform_square(30, seed=0)
        a = random_coloring(ps, 99)
        b = random_coloring(ps, 99)
        assert a.assignment == b.assignment
        assert len(a.assignment) == 30
        assert set(a.assignment) <= {RED, BLUE}
        assert random_coloring(ps, 100).assignment != a.assignment
