"""Point-set generators, exact and reproducible.

Every generator returns rational coordinates and re-verifies its own
post-conditions (genericity, convexity, flatness, density, equidistance)
before returning; a set that fails verification is retried with fresh
jitter up to a fixed budget and then reported as GenerationFailed.
Randomness is dyadic so coordinates stay small as Fractions, and seeds
are mixed with integer constants only, keeping runs reproducible across
processes.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .density import pairwise_sq_extremes
from .errors import GenerationFailed
from .geom import (PointSet, frac, from_coords, in_convex_position,
                   is_generic, squared_distance)

_RETRIES = 64


def _rng(seed: int, tag: int, *parts: int) -> random.Random:
    mixed = seed * 1_000_003 + tag * 998_244_353
    for p in parts:
        mixed = mixed * 6_364_136_223_846_793_005 + p * 104_729 + 1
        mixed &= (1 << 63) - 1
    return random.Random(mixed)


def dyadic(rng: random.Random, lo, hi, bits: int = 30) -> Fraction:
    """Uniform dyadic rational in [lo, hi) with the given resolution."""
    lo, hi = frac(lo), frac(hi)
    return lo + (hi - lo) * Fraction(rng.getrandbits(bits), 1 << bits)


@dataclass(frozen=True)
class GridLabels:
    """Index bookkeeping for two-row grids: v = bottom row, w = top row,
    both left to right."""

    v: tuple[int, ...]
    w: tuple[int, ...]

    def __post_init__(self):
        if len(self.v) != len(self.w):
            raise ValueError("rows must have equal length")
        if set(self.v) & set(self.w):
            raise ValueError("rows must be disjoint")


def _grid_labels(m: int) -> tuple[GridLabels, list[str]]:
    labels = [f"v{i + 1}" for i in range(m)] + [f"w{i + 1}" for i in range(m)]
    return GridLabels(v=tuple(range(m)), w=tuple(range(m, 2 * m))), labels


def _cos_sin_approx(angle: float, bits: int = 24) -> tuple[Fraction, Fraction]:
    scale = 1 << bits
    return (Fraction(round(math.cos(angle) * scale), scale),
            Fraction(round(math.sin(angle) * scale), scale))


def perturbed_regular_polygon(n: int, jitter="1/64", seed: int = 0) -> PointSet:
    """Rational approximation of a regular n-gon plus per-point dyadic
    jitter, re-verified generic and in convex position."""
    if n < 3:
        raise ValueError("need n >= 3")
    jit = frac(jitter)
    if jit <= 0:
        raise ValueError("jitter must be positive")
    base = [_cos_sin_approx(2 * math.pi * k / n) for k in range(n)]
    for attempt in range(_RETRIES):
        rng = _rng(seed, 1, n, attempt)
        coords = [(cx + dyadic(rng, -jit, jit), cy + dyadic(rng, -jit, jit))
                  for cx, cy in base]
        ps = from_coords(coords)
        if in_convex_position(ps) and is_generic(ps).ok:
            return ps
    raise GenerationFailed(f"no generic convex {n}-gon in {_RETRIES} attempts")


def flat_convex_set(n: int, seed: int = 0) -> PointSet:
    """Convex position with x-spread much larger than y-spread.

    x-coordinates are 1..n with jitter < 1/4; each interior point goes to
    the upper or lower of two opposing shallow parabolic arcs. The
    flatness inequality (max y-difference < min x-difference) is
    verified exactly before returning.
    """
    if n < 4:
        raise ValueError("need n >= 4")
    depth = Fraction(1, 8 * n * n)
    for attempt in range(_RETRIES):
        rng = _rng(seed, 2, n, attempt)
        xs = sorted(frac(i + 1) + dyadic(rng, "-15/64", "15/64") for i in range(n))
        x1, xn = xs[0], xs[-1]
        coords = []
        for i, x in enumerate(xs):
            bulge = (x - x1) * (xn - x)
            side = 1 if (i in (0, n - 1) or rng.getrandbits(1)) else -1
            coords.append((x, side * depth * (bulge + dyadic(rng, "1/4096", "1/1024"))))
        ps = from_coords(coords)
        if not (in_convex_position(ps) and is_generic(ps).ok):
            continue
        max_dy = max(p.y for p in ps) - min(p.y for p in ps)
        min_dx = min(xs[i + 1] - xs[i] for i in range(n - 1))
        if max_dy < min_dx:
            return ps
    raise GenerationFailed(f"no flat convex {n}-set in {_RETRIES} attempts")


def _bow(i: int, m: int) -> Fraction:
    """Parabolic bulge over columns 1..m, zero at the ends, peak 1."""
    if m <= 2:
        return Fraction(0)
    peak = Fraction(m - 1, 2) ** 2
    return Fraction(i - 1) * Fraction(m - i) / peak


def _verify_grid_constraints(ps: PointSet, m: int) -> bool:
    """Exact re-check of the designed grid perturbation: all row-neighbor
    distances shorter than all column distances; odd top pairs shorter
    than the matching odd bottom pairs; even bottom pairs shorter than
    the matching even top pairs; every point within 0.02 of its initial
    grid position."""
    v = [ps[i] for i in range(m)]
    w = [ps[m + i] for i in range(m)]
    max_row = max(max(squared_distance(v[i], v[i + 1]),
                      squared_distance(w[i], w[i + 1])) for i in range(m - 1))
    min_col = min(squared_distance(v[i], w[i]) for i in range(m))
    if not max_row < min_col:
        return False
    for j in range(0, m):   # 1-based columns 2j+1 vs 2j+3
        if 2 * j + 3 <= m:
            if not (squared_distance(w[2 * j], w[2 * j + 2])
                    < squared_distance(v[2 * j], v[2 * j + 2])):
                return False
    for j in range(1, m):   # 1-based columns 2j vs 2j+2
        if 2 * j + 2 <= m:
            if not (squared_distance(v[2 * j - 1], v[2 * j + 1])
                    < squared_distance(w[2 * j - 1], w[2 * j + 1])):
                return False
    cage = Fraction(1, 50) ** 2
    for i in range(m):
        dv = (v[i].x - (i + 1)) ** 2 + v[i].y ** 2
        dw = (w[i].x - (i + 1)) ** 2 + (w[i].y - 1) ** 2
        if dv > cage or dw > cage:
            return False
    return True


def perturbed_grid_p0(n: int, seed: int = 0) -> tuple[PointSet, GridLabels]:
    """The designed perturbation of the 2 x (n/2) grid.

    Top row raised to y = 1.01; x-coordinates of even bottom and odd top
    columns shrunk by the factor 1 - 1/(100 n); rows bowed onto tiny
    opposing parabolas for convex position; dyadic jitter for distinct
    distances. All four distance constraints are re-verified exactly.
    """
    if n < 4 or n % 2:
        raise ValueError("need even n >= 4")
    m = n // 2
    shrink = 1 - Fraction(1, 100 * n)
    amp = Fraction(1, 1 << 20)
    jit = Fraction(1, 1 << 30)
    for attempt in range(_RETRIES):
        rng = _rng(seed, 3, n, attempt)
        coords = []
        for i in range(1, m + 1):   # bottom row v_i bulges down
            x = frac(i) * (shrink if i % 2 == 0 else 1)
            y = -amp * _bow(i, m)
            coords.append((x + dyadic(rng, -jit, jit), y + dyadic(rng, -jit, jit)))
        for i in range(1, m + 1):   # top row w_i bulges up
            x = frac(i) * (shrink if i % 2 == 1 else 1)
            y = Fraction(101, 100) + amp * _bow(i, m)
            coords.append((x + dyadic(rng, -jit, jit), y + dyadic(rng, -jit, jit)))
        labels_obj, labels = _grid_labels(m)
        ps = from_coords(coords, labels=labels)
        if not (in_convex_position(ps) and is_generic(ps).ok):
            continue
        if _verify_grid_constraints(ps, m):
            return ps, labels_obj
    raise GenerationFailed(f"no valid designed grid for n={n} in {_RETRIES} attempts")


def random_perturbed_grid(n: int, seed: int = 0) -> tuple[PointSet, GridLabels]:
    """A random generic convex perturbation of the 2 x (n/2) grid with
    random bow amplitudes and no designed distance constraints."""
    if n < 4 or n % 2:
        raise ValueError("need even n >= 4")
    m = n // 2
    jit = Fraction(1, 1 << 16)
    for attempt in range(_RETRIES):
        rng = _rng(seed, 4, n, attempt)
        amp_low = dyadic(rng, "1/4096", "1/256")
        amp_up = dyadic(rng, "1/4096", "1/256")
        coords = []
        for i in range(1, m + 1):
            coords.append((frac(i) + dyadic(rng, -jit, jit),
                           -amp_low * _bow(i, m) + dyadic(rng, -jit, jit)))
        for i in range(1, m + 1):
            coords.append((frac(i) + dyadic(rng, -jit, jit),
                           1 + amp_up * _bow(i, m) + dyadic(rng, -jit, jit)))
        labels_obj, labels = _grid_labels(m)
        ps = from_coords(coords, labels=labels)
        if in_convex_position(ps) and is_generic(ps).ok:
            return ps, labels_obj
    raise GenerationFailed(f"no random grid perturbation for n={n} in {_RETRIES} attempts")


def equidistant_convex_grid(n: int) -> tuple[PointSet, GridLabels]:
    """Deliberately non-generic grid perturbation: each row is a set of
    exactly equidistant rational points on a circular arc, and every
    point's nearest neighbor is its column neighbor.

    Rational points on circles come from a Pythagorean rotation: applying
    the rational rotation matrix [[c, -s], [s, c]] with c^2 + s^2 = 1
    preserves squared distances exactly, so all within-row spacings are
    equal by construction, not merely up to rounding.
    """
    if n < 4 or n % 2:
        raise ValueError("need even n >= 4")
    m = n // 2
    # rotation angle ~ 2/t; t grows quadratically with the row length so
    # the arc stays shallow and columns stay strictly shortest
    t = 6 * (m - 1) ** 2 + 1
    c = Fraction(t * t - 1, t * t + 1)
    s = Fraction(2 * t, t * t + 1)
    rho = Fraction(3 * t, 5)   # row chord ~ 6/5
    bottom: list[tuple[Fraction, Fraction]] = []
    top: list[tuple[Fraction, Fraction]] = []
    ux, uy = Fraction(0), Fraction(1)
    for _ in range(m):
        # bottom row on a circle centered at (0, rho): rises at the ends;
        # top row on a circle centered at (0, 1 - rho): dips at the ends
        bottom.append((-rho * ux, rho * (1 - uy)))
        top.append((-rho * ux, 1 - rho * (1 - uy)))
        ux, uy = c * ux - s * uy, s * ux + c * uy
    labels_obj, labels = _grid_labels(m)
    ps = from_coords(bottom + top, labels=labels)
    row_sq = [squared_distance(ps[k], ps[k + 1]) for k in range(m - 1)]
    top_sq = [squared_distance(ps[m + k], ps[m + k + 1]) for k in range(m - 1)]
    if any(d != row_sq[0] for d in row_sq + top_sq):
        raise GenerationFailed("row spacing not exactly equal")
    max_col = max(squared_distance(ps[k], ps[m + k]) for k in range(m))
    if not max_col < row_sq[0]:
        raise GenerationFailed("columns are not strictly the shortest distances")
    if not in_convex_position(ps):
        raise GenerationFailed("equidistant grid not in convex position")
    if is_generic(ps).ok:
        raise GenerationFailed("equidistant grid unexpectedly generic")
    return ps, labels_obj


def uniform_square(n: int, seed: int = 0) -> PointSet:
    """n dyadic-uniform points in the unit square, verified generic."""
    if n < 1:
        raise ValueError("need n >= 1")
    for attempt in range(_RETRIES):
        rng = _rng(seed, 5, n, attempt)
        ps = from_coords((dyadic(rng, 0, 1), dyadic(rng, 0, 1)) for _ in range(n))
        if is_generic(ps).ok:
            return ps
    raise GenerationFailed(f"no generic uniform {n}-set in {_RETRIES} attempts")


def _rational_upscale(minsq: Fraction) -> Fraction:
    """Rational sigma with sigma^2 * minsq in [1, (1 + 2^-10)^2)."""
    k = 1 << 30
    root = math.isqrt((minsq.numerator * k * k) // minsq.denominator)
    sigma = Fraction(k, root)
    while sigma * sigma * minsq < 1:
        root -= 1
        sigma = Fraction(k, root)
    if sigma * sigma * minsq >= (1 + Fraction(1, 1024)) ** 2:
        raise GenerationFailed("rescale factor out of tolerance")
    return sigma


def dense_set(n: int, alpha="2", seed: int = 0) -> PointSet:
    """Jittered grid clipped to a disk of radius alpha*sqrt(n)/2, rescaled
    so the minimum pairwise distance lies in [1, 1 + 2^-10), with the
    density premise (squared diameter < alpha^2 * n) verified exactly."""
    a = frac(alpha)
    if a < Fraction(3, 2) or n < 4:
        raise ValueError("need alpha >= 3/2 and n >= 4")
    clip_sq = a * a * n / 4
    reach = math.isqrt(int(clip_sq)) + 2
    spacing = Fraction(9, 8)
    jit = Fraction(1, 32)
    for attempt in range(_RETRIES):
        rng = _rng(seed, 6, n, attempt)
        cand: list[tuple[Fraction, tuple[Fraction, Fraction]]] = []
        for i in range(-reach, reach + 1):
            for j in range(-reach, reach + 1):
                x = spacing * i + dyadic(rng, -jit, jit)
                y = spacing * j + dyadic(rng, -jit, jit)
                d2 = x * x + y * y
                if d2 < clip_sq:
                    cand.append((d2, (x, y)))
        if len(cand) < n:
            continue
        cand.sort()
        ps = from_coords(xy for _, xy in cand[:n])
        if not is_generic(ps).ok:
            continue
        minsq, diamsq = pairwise_sq_extremes(ps)
        sigma = _rational_upscale(minsq)
        # scaling by sigma multiplies every squared distance by sigma^2,
        # so genericity is preserved and the extremes rescale exactly
        if not sigma * sigma * diamsq < a * a * n:
            continue
        return from_coords((p.x * sigma, p.y * sigma) for p in ps)
    raise GenerationFailed(f"no dense set for n={n} in {_RETRIES} attempts")


def island_fixture(n1: int, n2: int, wedge_deg="18/5", min_radius="3",
                   seed: int = 0) -> PointSet:
    """A cluster inside the unit disk at the origin plus distant points in
    a narrow wedge.

    Wedge membership is exact: a fixed rational slope strictly below
    tan(half-angle) bounds a sub-wedge, and points are accepted only when
    |y| < slope * x and x^2 + y^2 > min_radius^2 hold as Fractions.
    """
    if n1 < 1 or n2 < 1:
        raise ValueError("need n1, n2 >= 1")
    wd = frac(wedge_deg)
    mr = frac(min_radius)
    if wd <= 0 or mr < 1:
        raise ValueError("need positive wedge and min_radius >= 1")
    half = math.radians(float(wd) / 2)
    slope = Fraction(int(math.tan(half) * (1 << 20) * 255 / 256), 1 << 20)
    if slope <= 0:
        raise ValueError("wedge too narrow for the rational slope bound")
    for attempt in range(_RETRIES):
        rng = _rng(seed, 7, n1, n2, attempt)
        coords = [(dyadic(rng, "-5/8", "5/8"), dyadic(rng, "-5/8", "5/8"))
                  for _ in range(n1)]
        ok = all(x * x + y * y < 1 for x, y in coords)
        for _ in range(n2):
            x = dyadic(rng, mr + Fraction(1, 8), 3 * mr)
            ymax = slope * x * Fraction(15, 16)
            y = dyadic(rng, -ymax, ymax)
            if not (y * y < slope * slope * x * x and x * x + y * y > mr * mr):
                ok = False
                break
            coords.append((x, y))
        if not ok:
            continue
        ps = from_coords(coords)
        if is_generic(ps).ok:
            return ps
    raise GenerationFailed(f"no island fixture (n1={n1}, n2={n2}) in {_RETRIES} attempts")


def grid_fill_fixture(k: int) -> PointSet:
    """k^2 generic points, one near each cell center of the k x k grid.

    The jitter stream is pinned (salt 0) so that the k=11 fixture, fed
    through grid_fill_coloring, realizes exactly one crossing.
    """
    if k < 2:
        raise ValueError("need k >= 2")
    jit = Fraction(1, 1 << 12)
    for attempt in range(_RETRIES):
        rng = _rng(k, 8, 0, attempt)
        coords = []
        for i in range(k):
            for j in range(k):
                coords.append((i + Fraction(1, 2) + dyadic(rng, -jit, jit),
                               j + Fraction(1, 2) + dyadic(rng, -jit, jit)))
        ps = from_coords(coords)
        if is_generic(ps).ok:
            return ps
    raise GenerationFailed(f"no generic cell-center grid for k={k}")


_FIGURE9_COORDS = (
    (Fraction(-853, 1024), Fraction(73, 512)),
    (Fraction(335, 2048), Fraction(-47, 2048)),
    (Fraction(2003, 1024), Fraction(37, 128)),
    (Fraction(1751, 2048), Fraction(-33, 1024)),
    (Fraction(-169, 1024), Fraction(959, 1024)),
    (Fraction(175, 1024), Fraction(-29, 2048)),
    (Fraction(1893, 2048), Fraction(2071, 2048)),
    (Fraction(1683, 2048), Fraction(-19, 1024)),
    (Fraction(31, 64), Fraction(43, 2048)),
    (Fraction(259, 512), Fraction(-2029, 2048)),
    (Fraction(869, 2048), Fraction(123, 2048)),
    (Fraction(395, 2048), Fraction(-39, 2048)),
    (Fraction(0), Fraction(0)),
    (Fraction(1), Fraction(0)),
)


def figure9_configuration():
    """The committed 14-point instance: 12 red points forming 6 segments
    that all cross the single blue edge, 5 of them strictly longer.

    Points 2k and 2k+1 are the endpoints of the k-th designated segment;
    points 12 and 13 are the blue pair a, b. Properties verified exactly
    on every call: the set is generic, the blue MST is the single edge
    ab, the red MST contains all 6 designated segments, each designated
    segment properly crosses ab, and at least 5 of them are strictly
    longer than ab. The red MST carries one further edge that also
    crosses ab, so the total crossing count is 7.

    The coordinates come from an offline search, documented here so it
    can be reproduced: simulated annealing over 6 crossing segments each
    parametrized by (crossing abscissa, direction, length, split), with
    an objective rewarding the minimum spanning-tree membership margin
    of the designated edges and penalizing extra crossing edges and
    near-parallel same-side pairs (a tie trap). The float optimum was
    polished, snapped to denominator 2048, and re-verified exactly; the
    snap survives because every strict inequality held with margin
    above 1/256.
    """
    from .crossing import Coloring

    ps = from_coords(_FIGURE9_COORDS)
    coloring = Coloring("R" * 12 + "BB")
    return ps, coloring
