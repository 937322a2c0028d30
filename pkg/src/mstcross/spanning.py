"""Euclidean minimum spanning trees with exact weight comparisons.

Edge weights are compared by exact squared length (sqrt is monotone, so
the MST is the same). Ties between usable edges are detected and
flagged; enumerate_msts walks every optimal choice. Large instances are
sorted on float keys first, then runs of nearly-equal keys are reordered
by their exact integer weights, which keeps the comparison exact while
sorting at float speed.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from .errors import CapExceeded
from .geom import PointSet, sqdist_i

_NUMPY_THRESHOLD = 300


@dataclass(frozen=True)
class Tree:
    """A spanning tree over a vertex subset, edges as sorted index pairs."""

    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    tie: bool = False

    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges)


class _UnionFind:
    __slots__ = ("parent", "size", "history")

    def __init__(self, items):
        self.parent = {i: i for i in items}
        self.size = {i: 1 for i in items}
        self.history: list[tuple[int, int]] = []

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            x = p[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        self.history.append((rb, ra))
        return True

    def rollback(self, mark: int) -> None:
        while len(self.history) > mark:
            rb, ra = self.history.pop()
            self.parent[rb] = rb
            self.size[ra] -= self.size[rb]


def _sorted_edge_classes(pts: list[tuple[int, int]], subset: Sequence[int]):
    """Edges of the complete graph on subset, sorted by exact weight.

    Returns (edges, class_ids): edges in nondecreasing exact squared
    length with deterministic (weight, i, j) tie order, and an int class
    id per edge where equal ids mean exactly equal weight.
    """
    m = len(subset)
    if m > _NUMPY_THRESHOLD:
        return _sorted_edge_classes_large(pts, subset)
    weighted = []
    for a in range(m):
        i = subset[a]
        pi = pts[i]
        for b in range(a + 1, m):
            j = subset[b]
            w = sqdist_i(pi, pts[j])
            weighted.append((w, i, j) if i < j else (w, j, i))
    weighted.sort()
    edges = [(i, j) for _, i, j in weighted]
    class_ids = []
    cid = -1
    prev = None
    for w, _, _ in weighted:
        if w != prev:
            cid += 1
            prev = w
        class_ids.append(cid)
    return edges, class_ids


def _sorted_edge_classes_large(pts: list[tuple[int, int]], subset: Sequence[int]):
    import numpy as np

    sub = np.array(subset, dtype=np.int64)
    xs = np.array([float(pts[i][0]) for i in subset])
    ys = np.array([float(pts[i][1]) for i in subset])
    m = len(subset)
    ia, ja = np.triu_indices(m, k=1)
    dx = xs[ia] - xs[ja]
    dy = ys[ia] - ys[ja]
    sq = dx * dx + dy * dy
    order = np.argsort(sq, kind="stable")
    sq_sorted = sq[order]
    # Chain together runs whose float keys are too close to trust; only
    # those runs need exact weights. Strict float separation beyond the
    # tolerance implies strict exact order (rounding is monotone and the
    # computed key is within a few ulps of the true value).
    tol = 1e-12
    gaps = np.diff(sq_sorted)
    safe = gaps > tol * np.maximum(sq_sorted[:-1], 1e-300)
    edges: list[tuple[int, int]] = []
    class_ids: list[int] = []
    cid = -1
    k = 0
    order_l = order.tolist()
    ia_l = ia.tolist()
    ja_l = ja.tolist()
    sub_l = sub.tolist()
    total = len(order_l)
    while k < total:
        end = k
        while end < total - 1 and not safe[end]:
            end += 1
        if end == k:
            e = order_l[k]
            i, j = sub_l[ia_l[e]], sub_l[ja_l[e]]
            if i > j:
                i, j = j, i
            cid += 1
            edges.append((i, j))
            class_ids.append(cid)
        else:
            block = []
            for t in range(k, end + 1):
                e = order_l[t]
                i, j = sub_l[ia_l[e]], sub_l[ja_l[e]]
                if i > j:
                    i, j = j, i
                block.append((sqdist_i(pts[i], pts[j]), i, j))
            block.sort()
            prev = None
            for w, i, j in block:
                if w != prev:
                    cid += 1
                    prev = w
                edges.append((i, j))
                class_ids.append(cid)
        k = end + 1
    return edges, class_ids


def mst(ps: PointSet, subset: Sequence[int] | None = None) -> Tree:
    """Kruskal MST of the points at the given indices (default: all).

    Deterministic: within an exact weight class edges are taken in
    (min index, max index) order. tie is set when some weight class
    offered a real choice, i.e. more than one MST exists.
    """
    indices = _normalize_subset(ps, subset)
    if len(indices) == 1:
        return Tree(vertices=tuple(indices), edges=(), tie=False)
    pts = ps.scaled()
    edges, class_ids = _sorted_edge_classes(pts, indices)
    uf = _UnionFind(indices)
    chosen: list[tuple[int, int]] = []
    tie = False
    need = len(indices) - 1
    k = 0
    total = len(edges)
    while k < total and len(chosen) < need:
        end = k
        cid = class_ids[k]
        while end < total and class_ids[end] == cid:
            end += 1
        if end - k == 1:
            i, j = edges[k]
            if uf.union(i, j):
                chosen.append((i, j))
        else:
            usable = [e for e in edges[k:end] if uf.find(e[0]) != uf.find(e[1])]
            added = 0
            for i, j in usable:
                if uf.union(i, j):
                    chosen.append((i, j))
                    added += 1
            if len(usable) > added:
                tie = True
        k = end
    chosen.sort()
    return Tree(vertices=tuple(indices), edges=tuple(chosen), tie=tie)


def _normalize_subset(ps: PointSet, subset: Sequence[int] | None) -> list[int]:
    if subset is None:
        return list(range(len(ps)))
    indices = sorted(set(int(i) for i in subset))
    if not indices:
        raise ValueError("subset must be non-empty")
    if indices[0] < 0 or indices[-1] >= len(ps):
        raise ValueError("subset index out of range")
    return indices


def enumerate_msts(ps: PointSet, subset: Sequence[int] | None = None,
                   cap: int = 100_000) -> list[Tree]:
    """All minimum spanning trees, in lexicographic edge-list order.

    Weight classes are processed in increasing order; within a class
    every maximal acyclic choice is explored with union-find rollback.
    Raises CapExceeded if more than cap trees exist.
    """
    indices = _normalize_subset(ps, subset)
    if len(indices) == 1:
        return [Tree(vertices=tuple(indices), edges=(), tie=False)]
    pts = ps.scaled()
    edges, class_ids = _sorted_edge_classes(pts, indices)
    classes: list[list[tuple[int, int]]] = []
    for e, cid in zip(edges, class_ids):
        if cid == len(classes):
            classes.append([e])
        else:
            classes[cid].append(e)
    uf = _UnionFind(indices)
    need = len(indices) - 1
    results: list[tuple[tuple[int, int], ...]] = []

    def rank_of(cls: list[tuple[int, int]]) -> int:
        mark = len(uf.history)
        r = 0
        for i, j in cls:
            if uf.union(i, j):
                r += 1
        uf.rollback(mark)
        return r

    def choices(cls: list[tuple[int, int]], rank: int) -> list[list[tuple[int, int]]]:
        """Every acyclic subset of cls of the given rank, in index order."""
        out: list[list[tuple[int, int]]] = []
        picked: list[tuple[int, int]] = []

        def rec(pos: int):
            if len(picked) == rank:
                out.append(list(picked))
                if len(out) > cap:
                    raise CapExceeded(f"more than {cap} choices in one weight class")
                return
            if rank - len(picked) > len(cls) - pos:
                return
            for nxt in range(pos, len(cls)):
                i, j = cls[nxt]
                if uf.union(i, j):
                    picked.append((i, j))
                    rec(nxt + 1)
                    picked.pop()
                    uf.rollback(len(uf.history) - 1)

        rec(0)
        return out

    def walk(ci: int, acc: list[tuple[int, int]]):
        if len(acc) == need:
            results.append(tuple(sorted(acc)))
            if len(results) > cap:
                raise CapExceeded(f"more than {cap} spanning trees")
            return
        if ci >= len(classes):
            return
        cls = classes[ci]
        rank = rank_of(cls)
        if rank == 0:
            walk(ci + 1, acc)
            return
        for subset_edges in choices(cls, rank):
            mark = len(uf.history)
            ok = all(uf.union(i, j) for i, j in subset_edges)
            assert ok
            walk(ci + 1, acc + subset_edges)
            uf.rollback(mark)

    walk(0, [])
    results.sort()
    tie = len(results) > 1
    verts = tuple(indices)
    return [Tree(vertices=verts, edges=e, tie=tie) for e in results]


def tree_is_mst(ps: PointSet, tree: Tree) -> bool:
    """Cycle-property check: tree is an MST of its vertex set.

    For every non-tree pair (u, v), every tree edge on the u-v path must
    be no longer than the direct segment uv. Also validates that the
    edges really form a spanning tree of tree.vertices.
    """
    verts = list(tree.vertices)
    vset = set(verts)
    if len(tree.edges) != len(verts) - 1:
        return False
    adj: dict[int, list[tuple[int, int]]] = {v: [] for v in verts}
    pts = ps.scaled()
    for i, j in tree.edges:
        if i not in vset or j not in vset:
            return False
        w = sqdist_i(pts[i], pts[j])
        adj[i].append((j, w))
        adj[j].append((i, w))
    # connectivity (and with the edge count, acyclicity)
    seen = {verts[0]}
    stack = [verts[0]]
    while stack:
        u = stack.pop()
        for v, _ in adj[u]:
            if v not in seen:
                seen.add(v)
                stack.append(v)
    if len(seen) != len(verts):
        return False
    edge_set = tree.edge_set()
    for root in verts:
        # max edge weight along the tree path from root to each vertex
        maxw = {root: 0}
        stack = [root]
        while stack:
            u = stack.pop()
            for v, w in adj[u]:
                if v not in maxw:
                    maxw[v] = max(maxw[u], w)
                    stack.append(v)
        for v in verts:
            if v <= root:
                continue
            if (root, v) in edge_set:
                continue
            if maxw[v] > sqdist_i(pts[root], pts[v]):
                return False
    return True


def tree_to_json(tree: Tree) -> str:
    payload = {
        "vertices": list(tree.vertices),
        "edges": [list(e) for e in tree.edges],
        "tie": tree.tie,
    }
    return json.dumps(payload, separators=(",", ":"), sort_keys=True)


def tree_from_json(text: str) -> Tree:
    payload = json.loads(text)
    return Tree(
        vertices=tuple(int(v) for v in payload["vertices"]),
        edges=tuple((int(i), int(j)) for i, j in payload["edges"]),
        tie=bool(payload.get("tie", False)),
    )
