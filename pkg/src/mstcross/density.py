"""Bounding squares, the density measure phi, and grid-filling tests.

phi(P) is |P| divided by the area of the minimum integer-side axis-
aligned bounding square. "Filling" a k x k grid is tested under one
canonical placement: the bounding square of the (sub)set is mapped
affinely onto [1/2, k - 1/2]^2, so extreme points land inside the border
cells rather than on the outer grid boundary. All tests are exact.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from .geom import PointSet


def pairwise_sq_extremes(ps: PointSet) -> tuple[Fraction, Fraction]:
    """(min, max) squared pairwise distance via the integer-scaled copy."""
    pts = ps.scaled()
    denom = 1
    for p in ps:
        denom = math.lcm(denom, p.x.denominator, p.y.denominator)
    lo = hi = None
    for i in range(len(pts)):
        xi, yi = pts[i]
        for j in range(i + 1, len(pts)):
            d = (xi - pts[j][0]) ** 2 + (yi - pts[j][1]) ** 2
            if lo is None or d < lo:
                lo = d
            if hi is None or d > hi:
                hi = d
    if lo is None:
        raise ValueError("need at least 2 points")
    dd = denom * denom
    return Fraction(lo, dd), Fraction(hi, dd)


def _extent(ps: PointSet, subset: Sequence[int] | None):
    idx = range(len(ps)) if subset is None else tuple(subset)
    if not idx:
        raise ValueError("empty subset has no bounding square")
    xs = [ps[i].x for i in idx]
    ys = [ps[i].y for i in idx]
    return min(xs), min(ys), max(xs) - min(xs), max(ys) - min(ys)


def bounding_square_side(ps: PointSet, subset: Sequence[int] | None = None) -> int:
    """Side of the minimum integer-side axis-aligned square containing
    the points; at least 1."""
    _, _, w, h = _extent(ps, subset)
    return max(1, math.ceil(max(w, h)))


def density(ps: PointSet, subset: Sequence[int] | None = None) -> Fraction:
    """phi = point count / bounding-square area."""
    side = bounding_square_side(ps, subset)
    count = len(ps) if subset is None else len(tuple(subset))
    return Fraction(count, side * side)


def canonical_cells(ps: PointSet, k: int,
                    subset: Sequence[int] | None = None) -> dict[tuple[int, int], list[int]]:
    """Map each point to its k x k grid cell under the canonical
    placement; only points strictly inside a cell are assigned."""
    if k < 1:
        raise ValueError("need k >= 1")
    xmin, ymin, w, h = _extent(ps, subset)
    span = max(w, h)
    if span == 0:
        span = Fraction(1)
    idx = range(len(ps)) if subset is None else tuple(subset)
    scale = Fraction(k - 1, 1) / span if k > 1 else Fraction(0)
    half = Fraction(1, 2)
    cells: dict[tuple[int, int], list[int]] = {}
    for i in idx:
        x = (ps[i].x - xmin) * scale + half
        y = (ps[i].y - ymin) * scale + half
        cx, cy = math.floor(x), math.floor(y)
        if Fraction(cx) < x < cx + 1 and Fraction(cy) < y < cy + 1:
            cells.setdefault((cx, cy), []).append(i)
    return cells


def fills_grid(ps: PointSet, k: int, subset: Sequence[int] | None = None) -> bool:
    """True when every cell of the k x k grid holds at least one point in
    its interior under the canonical placement."""
    cells = canonical_cells(ps, k, subset)
    return all((i, j) in cells for i in range(k) for j in range(k))


def density_improving_subset(ps: PointSet, k: int,
                             subset: Sequence[int] | None = None) -> tuple[int, ...]:
    """The most populated of the k^2 congruent subsquares of the minimum
    integer-side bounding square (row-major tie-break).

    When the set does not fill the k x k grid, the pigeonhole argument
    puts at least n/(k^2 - 1) points into some subsquare, so iterating
    this step strictly improves density until a subset fills.
    """
    idx = range(len(ps)) if subset is None else tuple(subset)
    xmin, ymin, _, _ = _extent(ps, subset)
    side = bounding_square_side(ps, subset)
    cell = Fraction(side, k)
    buckets: dict[tuple[int, int], list[int]] = {}
    for i in idx:
        cx = min(k - 1, math.floor((ps[i].x - xmin) / cell))
        cy = min(k - 1, math.floor((ps[i].y - ymin) / cell))
        buckets.setdefault((cx, cy), []).append(i)
    best = max(sorted(buckets), key=lambda c: len(buckets[c]))
    return tuple(sorted(buckets[best]))
