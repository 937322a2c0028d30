from fractions import Fraction

import pytest

from mstcross.errors import CapExceeded
from mstcross.generators import equidistant_convex_grid, uniform_square
from mstcross.geom import from_coords, squared_distance
from mstcross.spanning import (Tree, enumerate_msts, mst, tree_from_json,
                               tree_is_mst, tree_to_json)


def tree_weight(ps, tree):
    return sum(squared_distance(ps[i], ps[j]) for i, j in tree.edges)


def test_mst_of_345_triangle_drops_longest_side():
    ps = from_coords([(0, 0), (3, 0), (3, 4)])
    tree = mst(ps)
    assert set(tree.edges) == {(0, 1), (1, 2)}
    assert not tree.tie


def test_mst_respects_subset():
    ps = from_coords([(0, 0), (1, 0), (10, 10), (11, 10)])
    tree = mst(ps, subset=[0, 2])
    assert tree.vertices == (0, 2)
    assert tree.edges == ((0, 2),)


def test_mst_rejects_empty_and_out_of_range_subsets():
    with pytest.raises(ValueError):
        mst(from_coords([(0, 0)]), subset=[])
    with pytest.raises(ValueError):
        mst(from_coords([(0, 0)]), subset=[3])


def test_single_vertex_tree_has_no_edges():
    tree = mst(from_coords([(0, 0), (5, 5)]), subset=[1])
    assert tree.vertices == (1,) and tree.edges == ()


def test_mst_weight_beats_every_other_spanning_tree_exhaustively():
    # 5 points: check all 5^3 = 125 labeled spanning trees via Cayley
    # enumeration against the Kruskal result
    import itertools
    ps = uniform_square(5, seed=3)
    best = tree_weight(ps, mst(ps))
    n = len(ps)
    edges = list(itertools.combinations(range(n), 2))
    seen = 0
    for subset in itertools.combinations(edges, n - 1):
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        ok = True
        for i, j in subset:
            ri, rj = find(i), find(j)
            if ri == rj:
                ok = False
                break
            parent[ri] = rj
        if not ok:
            continue
        seen += 1
        weight = sum(squared_distance(ps[i], ps[j]) for i, j in subset)
        assert weight >= best
    assert seen == 125  # Cayley: 5^(5-2) spanning trees on K5


def test_tie_flag_and_enumeration_on_equidistant_grid():
    ps, _ = equidistant_convex_grid(6)
    tree = mst(ps)
    assert tree.tie
    trees = enumerate_msts(ps, list(range(len(ps))))
    assert len(trees) > 1
    weights = {tree_weight(ps, t) for t in trees}
    assert len(weights) == 1  # every member is minimum
    # squared edge lengths agree as multisets across all MSTs
    multisets = {tuple(sorted(squared_distance(ps[i], ps[j])
                              for i, j in t.edges)) for t in trees}
    assert len(multisets) == 1


def test_enumerate_msts_generic_gives_single_tree():
    ps = uniform_square(7, seed=1)
    trees = enumerate_msts(ps, list(range(7)))
    assert len(trees) == 1
    assert trees[0].edges == mst(ps).edges


def test_enumerate_msts_cap():
    ps, _ = equidistant_convex_grid(8)
    with pytest.raises(CapExceeded):
        enumerate_msts(ps, list(range(len(ps))), cap=1)


def test_tree_is_mst_rejects_heavier_tree():
    ps = from_coords([(0, 0), (1, 0), (2, 0), (10, 1)])
    good = mst(ps)
    assert tree_is_mst(ps, good)
    bad = Tree(vertices=good.vertices, edges=((0, 3), (1, 3), (2, 3)))
    assert not tree_is_mst(ps, bad)


def test_tree_json_round_trip():
    tree = Tree(vertices=(0, 2, 5), edges=((0, 2), (2, 5)), tie=True)
    again = tree_from_json(tree_to_json(tree))
    assert again == tree
