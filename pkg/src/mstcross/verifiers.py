"""Samplers that stress-test standalone geometric inequalities.

Each verifier draws premise-respecting random configurations, evaluates
a proved inequality with exact arithmetic, and reports how many samples
violated it. The expected violation count is always zero; a nonzero
count means the implementation (sampler or evaluator) is wrong, which
is precisely what the suite exists to catch. Verifiers sample, they do
not prove.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

from .crossing import Coloring, cross_rb, longer_edge_crossing_profile
from .generators import (_rng, dyadic, figure9_configuration, island_fixture,
                         uniform_square)
from .geom import PointSet, from_coords, sqdist_i
from .spanning import mst
from .strategies import random_coloring

Pt = tuple[Fraction, Fraction]

# cos(1 degree) = 0.99984769...; any exact cosine at least this bound
# certifies an angle of at most ~0.81 degrees, safely inside the 1-degree
# premise (a bound BELOW cos 1deg would admit angles beyond the premise)
_COS_CERT = Fraction(9999, 10000)


def _sub(p: Pt, q: Pt) -> Pt:
    return (p[0] - q[0], p[1] - q[1])


def _dot(u: Pt, v: Pt) -> Fraction:
    return u[0] * v[0] + u[1] * v[1]


def _cross(u: Pt, v: Pt) -> Fraction:
    return u[0] * v[1] - u[1] * v[0]


def _sq(u: Pt) -> Fraction:
    return u[0] * u[0] + u[1] * u[1]


def segment_crossing_point(a: Pt, b: Pt, c: Pt, d: Pt) -> Pt | None:
    """The proper crossing point of segments ab and cd, or None."""
    r = _sub(b, a)
    s = _sub(d, c)
    denom = _cross(r, s)
    if denom == 0:
        return None
    t = _cross(_sub(c, a), s) / denom
    u = _cross(_sub(c, a), r) / denom
    if not (0 < t < 1 and 0 < u < 1):
        return None
    return (a[0] + t * r[0], a[1] + t * r[1])


def small_angle_premises(a: Pt, b: Pt, c: Pt, d: Pt) -> bool:
    """Exact check of the crossing-pair premises.

    Requires: ab and cd cross properly at x; |ab|, |cd| >= 2;
    |ax| <= |xb| and |cx| <= |xd|; angle axc at most 1 degree
    (certified through cos >= 9999/10000 on squared quantities).
    """
    x = segment_crossing_point(a, b, c, d)
    if x is None:
        return False
    if _sq(_sub(b, a)) < 4 or _sq(_sub(d, c)) < 4:
        return False
    if _sq(_sub(a, x)) > _sq(_sub(b, x)) or _sq(_sub(c, x)) > _sq(_sub(d, x)):
        return False
    xa, xc = _sub(a, x), _sub(c, x)
    dot = _dot(xa, xc)
    if dot <= 0:
        return False
    return dot * dot * _COS_CERT.denominator ** 2 >= (
        _COS_CERT.numerator ** 2 * _sq(xa) * _sq(xc))


def small_angle_conclusion_holds(a: Pt, b: Pt, c: Pt, d: Pt) -> bool:
    """max(|ab|, |cd|) >= max(|ac|, |bd|) + 1/2, decided on squares.

    With L2 = max side squared and D2 = max of |ac|^2, |bd|^2, the claim
    fails iff sqrt(L2) < sqrt(D2) + 1/2, i.e. iff r = L2 - D2 - 1/4 is
    negative or r^2 < D2.
    """
    L2 = max(_sq(_sub(b, a)), _sq(_sub(d, c)))
    D2 = max(_sq(_sub(c, a)), _sq(_sub(d, b)))
    r = L2 - D2 - Fraction(1, 4)
    if r < 0:
        return False
    return r * r >= D2


def _sample_crossing_pair(rng) -> tuple[Pt, Pt, Pt, Pt]:
    """A premise-satisfying pair: one segment on the x-axis through the
    origin, the other along a direction tilted by at most arctan(1/128)
    (~0.45 degrees), short arms a and c on the same side."""
    wy = dyadic(rng, Fraction(-1, 128), Fraction(1, 128), bits=20)
    alpha = dyadic(rng, Fraction(1), Fraction(4))
    beta = alpha if rng.getrandbits(4) == 0 else alpha + dyadic(
        rng, Fraction(0), Fraction(3))
    gamma = dyadic(rng, Fraction(1), Fraction(4))
    delta = gamma if rng.getrandbits(4) == 0 else gamma + dyadic(
        rng, Fraction(0), Fraction(3))
    a = (-alpha, Fraction(0))
    b = (beta, Fraction(0))
    c = (-gamma, -gamma * wy)
    d = (delta, delta * wy)
    return a, b, c, d


def verify_small_angle_lemma(trials: int, seed: int = 0) -> dict:
    """Sample near-parallel crossing segment pairs and test that the
    longer segment beats the longer of |ac|, |bd| by at least 1/2."""
    if trials < 1:
        raise ValueError("need trials >= 1")
    samples = 0
    violations = 0
    first_violation = None
    produced = 0
    t = 0
    while produced < trials:
        rng = _rng(seed, 20, t)
        t += 1
        quad = _sample_crossing_pair(rng)
        if not small_angle_premises(*quad):
            continue
        produced += 1
        samples += 1
        if not small_angle_conclusion_holds(*quad):
            violations += 1
            if first_violation is None:
                first_violation = [[str(x), str(y)] for x, y in quad]
    report = {"samples": samples, "violations": violations}
    if first_violation is not None:
        report["first_violation"] = first_violation
    return report


def count_bridges(ps: PointSet, n1: int) -> int:
    """MST edges joining the first n1 points to the remainder."""
    tree = mst(ps)
    return sum(1 for (u, v) in tree.edges if (u < n1) != (v < n1))


def verify_island_lemma(trials: int, seed: int = 0) -> dict:
    """Build random unit-disk-plus-far-wedge instances and check the MST
    uses exactly one edge between the two groups."""
    if trials < 1:
        raise ValueError("need trials >= 1")
    violations = 0
    first_violation = None
    for t in range(trials):
        rng = _rng(seed, 21, t)
        n1 = 2 + rng.randrange(8)
        n2 = 2 + rng.randrange(7)
        child = rng.getrandbits(48)
        ps = island_fixture(n1, n2, seed=child)
        bridges = count_bridges(ps, n1)
        if bridges != 1:
            violations += 1
            if first_violation is None:
                first_violation = {"trial": t, "n1": n1, "n2": n2,
                                   "seed": child, "bridges": bridges}
    report = {"samples": trials, "violations": violations}
    if first_violation is not None:
        report["first_violation"] = first_violation
    return report


def profile_crossing_constant(
        instances: Iterable[tuple[str, PointSet, Coloring]]) -> dict:
    """Sweep colorings and record longer-edge crossing profiles.

    For each (name, points, coloring) instance the profile is the larger
    of the two sides of longer_edge_crossing_profile. Any instance named
    like the committed 14-point configuration must reach at least 5 on
    the blue side. No ceiling is asserted: the true maximum over all
    instances is an open quantity, so the report is evidence only.
    """
    max_profile = 0
    histogram: dict[int, int] = {}
    details = []
    for name, ps, coloring in instances:
        rep = cross_rb(ps, coloring)
        max_red, max_blue = longer_edge_crossing_profile(rep)
        profile = max(max_red, max_blue)
        histogram[profile] = histogram.get(profile, 0) + 1
        max_profile = max(max_profile, profile)
        details.append({"name": name, "max_red": max_red,
                        "max_blue": max_blue, "crossings": rep.count})
        if "figure9" in name and max_blue < 5:
            raise AssertionError(
                f"{name}: blue-side profile {max_blue} < 5")
    return {"max_profile": max_profile, "histogram": histogram,
            "details": details}


def detect_good_cells(ps: PointSet, n: int) -> dict:
    """Locate cells whose points form the four-around-center pattern.

    The unit square splits into g x g cells of side 1/g with
    g = max(1, isqrt(n)//2), so the cell area tracks 4/n. Each cell
    splits into 11 x 11 half-open subcells; a cell is good when the four
    subcells edge-adjacent to the centermost one hold exactly one point
    each and every other subcell is empty.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    one = Fraction(1)
    for p in ps:
        if not (0 <= p.x <= one and 0 <= p.y <= one):
            raise ValueError("points must lie in the unit square")
    g = max(1, math.isqrt(n) // 2)
    side = Fraction(1, g)
    sub = side / 11
    cells: dict[tuple[int, int], dict[tuple[int, int], int]] = {}
    for p in ps:
        cx = min(g - 1, math.floor(p.x / side))
        cy = min(g - 1, math.floor(p.y / side))
        sx = min(10, math.floor((p.x - cx * side) / sub))
        sy = min(10, math.floor((p.y - cy * side) / sub))
        cells.setdefault((cx, cy), {})
        key = (sx, sy)
        cells[(cx, cy)][key] = cells[(cx, cy)].get(key, 0) + 1
    plus = {(5, 4), (5, 6), (4, 5), (6, 5)}
    good = []
    for cell in sorted(cells):
        occ = cells[cell]
        if set(occ) == plus and all(v == 1 for v in occ.values()):
            good.append(cell)
    return {"cells_per_axis": g, "cell_side": side,
            "good_cells": good, "points": len(ps)}


def good_cell_points(ps: PointSet, cell: tuple[int, int], n: int) -> list[int]:
    """Indices of the points inside one cell of the detect_good_cells grid."""
    g = max(1, math.isqrt(n) // 2)
    side = Fraction(1, g)
    out = []
    for i, p in enumerate(ps):
        cx = min(g - 1, math.floor(p.x / side))
        cy = min(g - 1, math.floor(p.y / side))
        if (cx, cy) == cell:
            out.append(i)
    return out


def internal_crossing_colorings(ps: PointSet,
                                quad: Sequence[int]) -> list[str]:
    """All 2-colorings of a 4-point cell that make the two trees cross.

    Enumerates the 16 red/blue assignments of the given indices (the
    rest of the set is left out entirely), counting an assignment when
    both classes are nonempty and their MSTs cross at least once. The
    crossing point is automatically inside the cell: it lies in the
    convex hull of the four points.
    """
    if len(quad) != 4:
        raise ValueError("need exactly 4 indices")
    local = from_coords((ps[i].x, ps[i].y) for i in quad)
    winners = []
    for mask in range(16):
        chars = ["R" if mask & (1 << j) else "B" for j in range(4)]
        coloring = Coloring("".join(chars))
        if not coloring.red or not coloring.blue:
            continue
        if cross_rb(local, coloring).count >= 1:
            winners.append("".join(chars))
    return winners


def good_cell_fixture(cell: tuple[int, int], n: int = 16,
                      seed: int = 0) -> PointSet:
    """Four points occupying exactly the plus-shaped subcells of one cell.

    Grid geometry matches detect_good_cells(n): cells of side
    1/max(1, isqrt(n)//2), each split 11x11. One jittered point sits in
    each of the four subcells adjacent to the center subcell; every
    other subcell of every cell stays empty, so detect_good_cells must
    report exactly this one cell as good.
    """
    g = max(1, math.isqrt(n) // 2)
    cx, cy = cell
    if not (0 <= cx < g and 0 <= cy < g):
        raise ValueError(f"cell {cell} outside the {g}x{g} grid")
    rng = _rng(seed, 22, cx, cy)
    side = Fraction(1, g)
    sub = side / 11
    coords = []
    for sx, sy in ((5, 4), (5, 6), (4, 5), (6, 5)):
        # keep the jitter in the middle half of the subcell: membership
        # stays strict even at the half-open boundaries
        x = cx * side + sx * sub + sub / 4 + dyadic(rng, 0, sub / 2)
        y = cy * side + sy * sub + sub / 4 + dyadic(rng, 0, sub / 2)
        coords.append((x, y))
    return from_coords(coords)


def verify_good_cell_lemma(trials: int, seed: int = 0) -> dict:
    """Plant a single good cell at a random grid position and check both
    halves of the claim: the detector finds exactly that cell, and
    exactly 2 of the 16 local colorings cross inside it."""
    if trials < 1:
        raise ValueError("need trials >= 1")
    violations = 0
    first_violation = None
    for t in range(trials):
        rng = _rng(seed, 22, t)
        n = 4 * rng.choice((2, 3, 4, 5)) ** 2
        g = max(1, math.isqrt(n) // 2)
        cell = (rng.randrange(g), rng.randrange(g))
        ps = good_cell_fixture(cell, n=n, seed=rng.getrandbits(48))
        report = detect_good_cells(ps, n)
        good = [tuple(c) for c in report["good_cells"]]
        winners = internal_crossing_colorings(ps, good_cell_points(ps, cell, n)) \
            if good == [cell] else []
        if good != [cell] or len(winners) != 2:
            violations += 1
            if first_violation is None:
                first_violation = {"trial": t, "n": n, "cell": list(cell),
                                   "good_cells": report["good_cells"],
                                   "crossing_colorings": winners}
    report = {"samples": trials, "violations": violations}
    if first_violation is not None:
        report["first_violation"] = first_violation
    return report


def profile_sweep_instances(trials: int, seed: int = 0):
    """Default instance stream for profile_crossing_constant: the
    committed 14-point figure9 fixture followed by random-colored
    uniform 40-point sets, one per trial."""
    ps, coloring = figure9_configuration()
    yield "figure9", ps, coloring
    for t in range(trials):
        rng = _rng(seed, 23, t)
        child = rng.getrandbits(48)
        sample = uniform_square(40, seed=child)
        yield f"uniform-40-{t}", sample, random_coloring(sample, child)
