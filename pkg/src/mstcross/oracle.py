"""Exhaustive ground truth for small instances.

exact_cross_number ranges over all 2^(n-1) - 1 colorings with both
classes non-empty (complement symmetry halves the space: point 0 is
always Red). Per coloring it runs one pass of Kruskal for both classes
over a single globally sorted edge list and counts crossings through
precomputed per-edge bitmasks, so the work per coloring is linear in
the edge count.

brute_force_mst_weight is the independent check on mst(): it minimizes
the total Euclidean length (a sum of square roots) over every spanning
tree, deciding near-ties with interval arithmetic at escalating
precision.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass
from typing import Sequence

from .crossing import Coloring
from .errors import (DegenerateIntersection, IndistinguishableAtPrecision,
                     NonGenericInput, SearchExhausted, TooLarge)
from .geom import PointSet, cross_class_i, from_coords, is_generic, sqdist_i, _PROPER, _DEGENERATE
from .spanning import Tree, enumerate_msts

DEFAULT_MAX_N = 22
NONGENERIC_MAX_N = 12


@dataclass(frozen=True)
class OracleResult:
    value: int
    witness: Coloring
    colorings: int
    elapsed_ms: float


class _Tables:
    """Sorted edges plus per-edge crossing bitmasks for one point set."""

    __slots__ = ("n", "edges", "endpoint_bits", "cross_mask", "degen_mask")

    def __init__(self, pts: list[tuple[int, int]]):
        n = len(pts)
        weighted = []
        for i in range(n):
            for j in range(i + 1, n):
                weighted.append((sqdist_i(pts[i], pts[j]), i, j))
        weighted.sort()
        edges = [(i, j) for _, i, j in weighted]
        m = len(edges)
        cross_mask = [0] * m
        degen_mask = [0] * m
        for a in range(m):
            ia, ja = edges[a]
            pa, pb = pts[ia], pts[ja]
            for b in range(a + 1, m):
                ib, jb = edges[b]
                if ia in (ib, jb) or ja in (ib, jb):
                    continue
                pc, pd = pts[ib], pts[jb]
                kind = cross_class_i(pa[0], pa[1], pb[0], pb[1],
                                     pc[0], pc[1], pd[0], pd[1])
                if kind == _PROPER:
                    cross_mask[a] |= 1 << b
                    cross_mask[b] |= 1 << a
                elif kind == _DEGENERATE:
                    degen_mask[a] |= 1 << b
                    degen_mask[b] |= 1 << a
        self.n = n
        self.edges = edges
        self.endpoint_bits = [(1 << i) | (1 << j) for i, j in edges]
        self.cross_mask = cross_mask
        self.degen_mask = degen_mask


def _eval_coloring(tables: _Tables, blue_pts: int) -> int:
    """Crossing count for the coloring where blue_pts bits mark Blue."""
    n = tables.n
    red_parent = list(range(n))
    blue_parent = list(range(n))

    def find(parent, x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    n_blue = blue_pts.bit_count()
    red_need = n - n_blue - 1
    blue_need = n_blue - 1
    red_edges: list[int] = []
    blue_bits = 0
    for idx, bits in enumerate(tables.endpoint_bits):
        masked = bits & blue_pts
        if masked == 0:
            if red_need:
                i, j = tables.edges[idx]
                ri, rj = find(red_parent, i), find(red_parent, j)
                if ri != rj:
                    red_parent[ri] = rj
                    red_edges.append(idx)
                    red_need -= 1
        elif masked == bits:
            if blue_need:
                i, j = tables.edges[idx]
                bi, bj = find(blue_parent, i), find(blue_parent, j)
                if bi != bj:
                    blue_parent[bi] = bj
                    blue_bits |= 1 << idx
                    blue_need -= 1
        if not red_need and not blue_need:
            break
    total = 0
    for idx in red_edges:
        if tables.degen_mask[idx] & blue_bits:
            raise DegenerateIntersection("tree edges touch or overlap")
        total += (tables.cross_mask[idx] & blue_bits).bit_count()
    return total


def _witness_string(n: int, blue_pts: int) -> str:
    return "".join("B" if (blue_pts >> i) & 1 else "R" for i in range(n))


def _scan_range(tables: _Tables, lo: int, hi: int):
    """Best (value, witness) over colorings lo..hi-1 of the mask space."""
    n = tables.n
    best_value = -1
    best_witness = ""
    for mask in range(lo, hi):
        blue_pts = mask << 1
        value = _eval_coloring(tables, blue_pts)
        if value > best_value:
            best_value = value
            best_witness = _witness_string(n, blue_pts)
        elif value == best_value:
            w = _witness_string(n, blue_pts)
            if w < best_witness:
                best_witness = w
    return best_value, best_witness


_WORKER_TABLES: _Tables | None = None


def _init_worker(pts: list[tuple[int, int]]) -> None:
    global _WORKER_TABLES
    _WORKER_TABLES = _Tables(pts)


def _worker_scan(args: tuple[int, int]):
    assert _WORKER_TABLES is not None
    return _scan_range(_WORKER_TABLES, args[0], args[1])


def exact_cross_number(ps: PointSet, max_n: int = DEFAULT_MAX_N,
                       workers: int = 1) -> OracleResult:
    """Maximum crossing count over every 2-coloring of a generic set.

    The witness is the argmax coloring with the lexicographically
    smallest label string; that tie-break makes the result identical for
    serial and parallel runs regardless of chunking.
    """
    n = len(ps)
    if n < 2:
        raise ValueError("need at least 2 points")
    if n > max_n:
        raise TooLarge(f"{n} points exceeds the limit of {max_n}")
    cert = is_generic(ps)
    if not cert.ok:
        raise NonGenericInput(f"input is not generic: {cert}")
    start = time.perf_counter()
    pts = ps.scaled()
    total = (1 << (n - 1)) - 1
    if workers > 1 and total >= 1 << 12:
        from concurrent.futures import ProcessPoolExecutor

        chunks = []
        step = (total + workers * 4 - 1) // (workers * 4)
        lo = 1
        while lo <= total:
            chunks.append((lo, min(lo + step, total + 1)))
            lo += step
        best_value = -1
        best_witness = ""
        with ProcessPoolExecutor(max_workers=workers, initializer=_init_worker,
                                 initargs=(pts,)) as pool:
            for value, witness in pool.map(_worker_scan, chunks):
                if value > best_value or (value == best_value and witness < best_witness):
                    best_value = value
                    best_witness = witness
    else:
        tables = _Tables(pts)
        best_value, best_witness = _scan_range(tables, 1, total + 1)
    elapsed = (time.perf_counter() - start) * 1000.0
    return OracleResult(value=best_value, witness=Coloring(best_witness),
                        colorings=total, elapsed_ms=elapsed)


def exact_cross_number_nongeneric(ps: PointSet, max_n: int = NONGENERIC_MAX_N,
                                  cap: int = 100_000) -> OracleResult:
    """Maximum over colorings of the minimum crossings over MST choices.

    The non-generic counterpart of exact_cross_number: per coloring all
    MSTs of both classes are enumerated and the adversary picks the pair
    with the fewest crossings.
    """
    n = len(ps)
    if n < 2:
        raise ValueError("need at least 2 points")
    if n > max_n:
        raise TooLarge(f"{n} points exceeds the limit of {max_n}")
    start = time.perf_counter()
    pts = ps.scaled()
    tables = _Tables(pts)
    edge_index = {e: i for i, e in enumerate(tables.edges)}

    def tree_bits(tree: Tree) -> int:
        bits = 0
        for e in tree.edges:
            bits |= 1 << edge_index[e]
        return bits

    total = (1 << (n - 1)) - 1
    best_value = -1
    best_witness = ""
    for mask in range(1, total + 1):
        blue_pts = mask << 1
        red = [i for i in range(n) if not (blue_pts >> i) & 1]
        blue = [i for i in range(n) if (blue_pts >> i) & 1]
        red_bits = [tree_bits(t) for t in enumerate_msts(ps, red, cap=cap)]
        blue_bits = [tree_bits(t) for t in enumerate_msts(ps, blue, cap=cap)]
        value = None
        for rb in red_bits:
            red_idx = [i for i in range(len(tables.edges)) if (rb >> i) & 1]
            for bb in blue_bits:
                cur = 0
                for idx in red_idx:
                    if tables.degen_mask[idx] & bb:
                        raise DegenerateIntersection("tree edges touch or overlap")
                    cur += (tables.cross_mask[idx] & bb).bit_count()
                if value is None or cur < value:
                    value = cur
                if value == 0:
                    break
            if value == 0:
                break
        assert value is not None
        if value > best_value:
            best_value = value
            best_witness = _witness_string(n, blue_pts)
        elif value == best_value:
            w = _witness_string(n, blue_pts)
            if w < best_witness:
                best_witness = w
    elapsed = (time.perf_counter() - start) * 1000.0
    return OracleResult(value=best_value, witness=Coloring(best_witness),
                        colorings=total, elapsed_ms=elapsed)


def _dyadic(rng: random.Random, lo, hi, bits: int = 30):
    from fractions import Fraction

    span = Fraction(hi) - Fraction(lo)
    return Fraction(lo) + span * Fraction(rng.getrandbits(bits), 1 << bits)


def search_zero_cross_5set(seed: int, max_trials: int = 1_000_000):
    """Random search for a 5-point set with crossing number 0 whose
    apex removal leaves crossing number 1.

    Samples a convex quadrilateral with a nearby apex above, verifies
    genericity, and tests both properties with the exact oracle.
    Returns (points, trials_used); raises SearchExhausted past the
    budget.
    """
    from .geom import in_convex_position

    rng = random.Random(seed)
    for trial in range(1, max_trials + 1):
        # flat convex quadrilateral: wide in x, shallow in y
        x1 = _dyadic(rng, 0, "1/8")
        x2 = x1 + _dyadic(rng, "1/8", "3/8")
        x3 = x2 + _dyadic(rng, "1/8", "3/8")
        x4 = x3 + _dyadic(rng, "1/8", "3/8")
        quad = [(x, _dyadic(rng, 0, "1/5")) for x in (x1, x2, x3, x4)]
        # apex above the middle of the quadrilateral
        apex = ((x2 + x3) / 2 + _dyadic(rng, "-1/8", "1/8"),
                max(y for _, y in quad) + _dyadic(rng, "1/8", "2/5"))
        try:
            sub = from_coords(quad)
            ps = from_coords(quad + [apex])
        except ValueError:
            continue
        if not in_convex_position(sub):
            continue
        if not is_generic(ps).ok:
            continue
        tables = _Tables(ps.scaled())
        value, _ = _scan_range(tables, 1, (1 << 4))
        if value != 0:
            continue
        if exact_cross_number(sub).value == 1:
            return ps, trial
    raise SearchExhausted(f"no witness within {max_trials} trials")


_TREE_SHAPE_CACHE: dict[int, list[list[tuple[int, int]]]] = {}


def _prufer_decode(seq: Sequence[int], m: int) -> list[tuple[int, int]]:
    degree = [1] * m
    for v in seq:
        degree[v] += 1
    edges = []
    leaf_heap = sorted(v for v in range(m) if degree[v] == 1)
    import heapq

    heapq.heapify(leaf_heap)
    for v in seq:
        u = heapq.heappop(leaf_heap)
        edges.append((min(u, v), max(u, v)))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaf_heap, v)
    u = heapq.heappop(leaf_heap)
    v = heapq.heappop(leaf_heap)
    edges.append((min(u, v), max(u, v)))
    return edges


def _all_tree_shapes(m: int) -> list[list[tuple[int, int]]]:
    """Edge lists of all labelled trees on m vertices (Prufer bijection)."""
    if m not in _TREE_SHAPE_CACHE:
        if m == 2:
            _TREE_SHAPE_CACHE[m] = [[(0, 1)]]
        else:
            shapes = []
            for seq in itertools.product(range(m), repeat=m - 2):
                shapes.append(_prufer_decode(seq, m))
            _TREE_SHAPE_CACHE[m] = shapes
    return _TREE_SHAPE_CACHE[m]


def _compare_sqrt_sums(sq_a: Sequence[int], sq_b: Sequence[int]) -> int:
    """Sign of sum(sqrt(sq_a)) - sum(sqrt(sq_b)), exactly.

    Interval arithmetic at escalating precision; equal multisets are
    equal without any numerics. Raises IndistinguishableAtPrecision if
    4096 bits cannot separate genuinely different sums.
    """
    if sorted(sq_a) == sorted(sq_b):
        return 0
    from mpmath import iv

    for prec in (64, 128, 256, 512, 1024, 2048, 4096):
        iv.prec = prec
        sa = sum(iv.sqrt(x) for x in sq_a)
        sb = sum(iv.sqrt(x) for x in sq_b)
        if sa < sb:
            return -1
        if sa > sb:
            return 1
    raise IndistinguishableAtPrecision(
        "sums of square roots too close to separate at 4096 bits")


def brute_force_mst_weight(ps: PointSet, subset: Sequence[int] | None = None) -> Tree:
    """Minimum-total-length spanning tree by exhausting all m^(m-2) trees.

    Independent of mst(): compares total Euclidean length (sums of
    square roots), not sorted edge weights. Limited to 8 vertices.
    """
    if subset is None:
        subset = list(range(len(ps)))
    subset = sorted(set(int(i) for i in subset))
    m = len(subset)
    if m > 8:
        raise TooLarge("brute force limited to 8 points")
    if m < 2:
        raise ValueError("need at least 2 points")
    pts = ps.scaled()
    sq = {}
    for a in range(m):
        for b in range(a + 1, m):
            sq[(a, b)] = sqdist_i(pts[subset[a]], pts[subset[b]])
    import math

    lengths = {e: math.sqrt(float(w)) for e, w in sq.items()}
    shapes = _all_tree_shapes(m)
    sums = [sum(lengths[e] for e in shape) for shape in shapes]
    best_float = min(sums)
    scale = max(best_float, 1.0)
    candidates = [k for k, s in enumerate(sums) if s <= best_float + 1e-9 * scale]
    best = candidates[0]
    for k in candidates[1:]:
        cmp = _compare_sqrt_sums([sq[e] for e in shapes[k]],
                                 [sq[e] for e in shapes[best]])
        if cmp < 0 or (cmp == 0 and sorted(shapes[k]) < sorted(shapes[best])):
            best = k
    edges = tuple(sorted((subset[a], subset[b]) for a, b in shapes[best]))
    return Tree(vertices=tuple(subset), edges=edges, tie=False)
