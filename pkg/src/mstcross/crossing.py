"""Crossings between the MSTs of the two color classes.

A coloring assigns each point Red, Blue, or Discarded. cross_rb builds
the MST of each color class and counts proper crossings between the two
edge sets; cross_rb_min does the same but minimizes over every MST
choice when weights tie. Crossing tests are exact; a bounding-box
prefilter on the integer grid only skips pairs that cannot intersect.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import DegenerateIntersection, EmptyColorClass, NonGenericInput
from .geom import PointSet, cross_class_i, sqdist_i, _DEGENERATE, _PROPER
from .spanning import Tree, enumerate_msts, mst

RED = "R"
BLUE = "B"
DISCARDED = "D"


@dataclass(frozen=True)
class Coloring:
    """Per-index color assignment, stored as a string over {R, B, D}."""

    assignment: str

    def __post_init__(self):
        bad = set(self.assignment) - {RED, BLUE, DISCARDED}
        if bad:
            raise ValueError(f"invalid color characters: {sorted(bad)}")

    def __len__(self) -> int:
        return len(self.assignment)

    def indices_of(self, color: str) -> tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.assignment) if c == color)

    @property
    def red(self) -> tuple[int, ...]:
        return self.indices_of(RED)

    @property
    def blue(self) -> tuple[int, ...]:
        return self.indices_of(BLUE)

    @property
    def discarded(self) -> tuple[int, ...]:
        return self.indices_of(DISCARDED)

    def complement(self) -> "Coloring":
        swap = {RED: BLUE, BLUE: RED, DISCARDED: DISCARDED}
        return Coloring("".join(swap[c] for c in self.assignment))


def coloring_from_indices(n: int, red: Iterable[int], blue: Iterable[int]) -> Coloring:
    chars = [DISCARDED] * n
    for i in red:
        chars[i] = RED
    for i in blue:
        if chars[i] == RED:
            raise ValueError(f"index {i} assigned both colors")
        chars[i] = BLUE
    return Coloring("".join(chars))


def format_coloring(coloring: Coloring) -> str:
    return coloring.assignment + "\n"


def parse_coloring(text: str) -> Coloring:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if len(lines) != 1:
        raise ValueError("coloring text must be a single line over {R,B,D}")
    return Coloring(lines[0])


@dataclass(frozen=True)
class CrossingReport:
    """Outcome of a red/blue crossing count.

    pairs lists (red_edge, blue_edge) for every proper crossing, in
    lexicographic order. count == len(pairs) always holds.
    """

    points: PointSet
    red_tree: Tree
    blue_tree: Tree
    pairs: tuple[tuple[tuple[int, int], tuple[int, int]], ...]

    @property
    def count(self) -> int:
        return len(self.pairs)


def cross_count(ps: PointSet, t1: Tree, t2: Tree):
    """Proper crossings between the edge sets of two vertex-disjoint trees.

    Returns (count, pairs). Raises DegenerateIntersection if any edge
    pair touches instead of properly crossing.
    """
    if set(t1.vertices) & set(t2.vertices):
        raise ValueError("trees must be vertex-disjoint")
    pts = ps.scaled()
    boxes2 = []
    for (c, d) in t2.edges:
        (cx, cy), (dx, dy) = pts[c], pts[d]
        boxes2.append((min(cx, dx), max(cx, dx), min(cy, dy), max(cy, dy)))
    pairs = []
    for (a, b) in t1.edges:
        (ax, ay), (bx, by) = pts[a], pts[b]
        x0, x1 = (ax, bx) if ax < bx else (bx, ax)
        y0, y1 = (ay, by) if ay < by else (by, ay)
        for idx, (c, d) in enumerate(t2.edges):
            bx0, bx1, by0, by1 = boxes2[idx]
            if bx0 > x1 or bx1 < x0 or by0 > y1 or by1 < y0:
                continue
            (cx, cy), (dx, dy) = pts[c], pts[d]
            kind = cross_class_i(ax, ay, bx, by, cx, cy, dx, dy)
            if kind == _PROPER:
                pairs.append(((a, b), (c, d)))
            elif kind == _DEGENERATE:
                raise DegenerateIntersection(
                    f"edges {(a, b)} and {(c, d)} touch or overlap")
    pairs.sort()
    return len(pairs), tuple(pairs)


def _split_classes(ps: PointSet, coloring: Coloring):
    if len(coloring) != len(ps):
        raise ValueError("coloring length must match point count")
    red = coloring.red
    blue = coloring.blue
    if not red or not blue:
        raise EmptyColorClass("both color classes must be non-empty")
    return red, blue


def cross_rb(ps: PointSet, coloring: Coloring) -> CrossingReport:
    """Crossing count between MST(Red) and MST(Blue).

    Discarded points are excluded entirely. Raises NonGenericInput when
    either class's MST hit a weight tie (result would be ambiguous), and
    EmptyColorClass when a class is empty.
    """
    red, blue = _split_classes(ps, coloring)
    t_red = mst(ps, red)
    t_blue = mst(ps, blue)
    if t_red.tie or t_blue.tie:
        raise NonGenericInput("MST weight tie; use cross_rb_min for tied inputs")
    _, pairs = cross_count(ps, t_red, t_blue)
    return CrossingReport(points=ps, red_tree=t_red, blue_tree=t_blue, pairs=pairs)


def cross_rb_min(ps: PointSet, coloring: Coloring, cap: int = 100_000) -> CrossingReport:
    """Minimum crossing count over every MST choice for both classes.

    Ranges over enumerate_msts for each class (CapExceeded applies) and
    returns the report of the lexicographically first minimizing pair.
    """
    red, blue = _split_classes(ps, coloring)
    red_trees = enumerate_msts(ps, red, cap=cap)
    blue_trees = enumerate_msts(ps, blue, cap=cap)
    best: CrossingReport | None = None
    for tr in red_trees:
        for tb in blue_trees:
            _, pairs = cross_count(ps, tr, tb)
            if best is None or len(pairs) < best.count:
                best = CrossingReport(points=ps, red_tree=tr, blue_tree=tb, pairs=pairs)
                if best.count == 0:
                    return best
    assert best is not None
    return best


def longer_edge_crossing_profile(rep: CrossingReport) -> tuple[int, int]:
    """(max_red, max_blue) of the longer-edge crossing counts.

    max_red is the maximum over red edges e of the number of blue edges
    that properly cross e and are at least as long; max_blue is the
    symmetric quantity over blue edges. The count for an edge is bounded
    by the total crossing count on that edge.
    """
    pts = rep.points.scaled()

    def sq(edge: tuple[int, int]) -> int:
        return sqdist_i(pts[edge[0]], pts[edge[1]])

    red_counts: dict[tuple[int, int], int] = {}
    blue_counts: dict[tuple[int, int], int] = {}
    for red_edge, blue_edge in rep.pairs:
        wr, wb = sq(red_edge), sq(blue_edge)
        if wb >= wr:
            red_counts[red_edge] = red_counts.get(red_edge, 0) + 1
        if wr >= wb:
            blue_counts[blue_edge] = blue_counts.get(blue_edge, 0) + 1
    max_red = max(red_counts.values(), default=0)
    max_blue = max(blue_counts.values(), default=0)
    return max_red, max_blue
