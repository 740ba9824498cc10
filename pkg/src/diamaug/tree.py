"""Optimal shortcut for a tree.

Some optimal shortcut joins two vertices of ``P_T``, the common part of all
longest paths.  Each component hanging off ``P_T`` is collapsed into one
pendant edge, leaving a caterpillar whose spine is ``P_T``, and every
spine shortcut is scored with the caterpillar four-part routine.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .metric import TreeInstance
from .optimize import OptResult
from .unicyclic import (
    CaterpillarInstance,
    Shortcut,
    caterpillar_diameter_with_shortcut,
    caterpillar_four_parts,
)

__all__ = [
    "CaterpillarInstance",
    "LongestPathData",
    "caterpillarize",
    "longest_path_data",
    "longest_path_intersection",
    "tree_diameter_path",
    "tree_optimal_shortcut",
]

PT_REL_TOL = 1e-9


def _sweep(adj, source, blocked=None):
    """Distances and parents from ``source``, not crossing any edge
    ``(u, v)`` for which ``blocked(u, v)`` is true."""
    dist = {source: 0.0}
    parent = {source: -1}
    stack = [source]
    while stack:
        u = stack.pop()
        for v, w in adj[u]:
            if v in dist or (blocked is not None and blocked(u, v)):
                continue
            dist[v] = dist[u] + w
            parent[v] = u
            stack.append(v)
    return dist, parent


def _farthest(dist) -> int:
    # smallest vertex id among ties keeps the sweep deterministic
    best = max(dist.values())
    return min(v for v, d in dist.items() if d == best)


def _double_sweep(adj, start, blocked=None):
    dist, _ = _sweep(adj, start, blocked)
    x = _farthest(dist)
    dist, parent = _sweep(adj, x, blocked)
    y = _farthest(dist)
    return x, y, dist[y], parent


def tree_diameter_path(tree: TreeInstance):
    """``(Q, L)``: a longest path as a vertex list and its length."""
    x, y, length, parent = _double_sweep(tree.adj, 0)
    path = [y]
    while path[-1] != x:
        path.append(parent[path[-1]])
    return path[::-1], float(length)


def _diameter_without(tree: TreeInstance, q: int) -> float:
    """Largest diameter among the components of the tree minus vertex ``q``."""
    best = 0.0
    seen = {q}
    blocked = lambda u, v: v == q  # noqa: E731
    for v, _ in tree.adj[q]:
        if v in seen:
            continue
        _, _, diam, comp = _double_sweep(tree.adj, v, blocked)
        seen.update(comp)
        best = max(best, diam)
    return best


def longest_path_intersection(tree: TreeInstance, Q, L: float) -> list[int]:
    """Vertices of ``Q`` lying on every longest path, in ``Q`` order.

    A vertex lies on every longest path exactly when deleting it leaves no
    path of length ``L``; "shorter" means shorter by more than
    ``1e-9 * L``.
    """
    if len(Q) == 0:
        raise ValueError("empty diameter path")
    tol = PT_REL_TOL * L
    keep = [i for i, q in enumerate(Q) if _diameter_without(tree, q) < L - tol]
    if not keep:
        raise ValueError("no vertex of Q lies on every longest path; Q/L inconsistent")
    if keep != list(range(keep[0], keep[-1] + 1)):
        raise ValueError("longest-path intersection is not contiguous along Q")
    return [Q[i] for i in keep]


@dataclass(frozen=True)
class LongestPathData:
    diameter_path: list[int]
    length: float
    core: list[int]     # P_T, a contiguous part of diameter_path

    @property
    def a(self) -> int:
        return self.core[0]

    @property
    def b(self) -> int:
        return self.core[-1]


def longest_path_data(tree: TreeInstance) -> LongestPathData:
    Q, L = tree_diameter_path(tree)
    return LongestPathData(Q, L, longest_path_intersection(tree, Q, L))


def caterpillarize(tree: TreeInstance, core) -> CaterpillarInstance:
    """Collapse each component of the tree minus the edges of ``core``."""
    core = list(core)
    pos = {v: i for i, v in enumerate(core)}
    if len(pos) != len(core):
        raise ValueError("core repeats a vertex")
    weights = []
    for u, v in zip(core, core[1:]):
        if not tree.has_edge(u, v):
            raise ValueError(f"core is not a path in the tree: ({u}, {v}) is not an edge")
        weights.append(tree.metric.distance(u, v))

    def spine_edge(u, v):
        return u in pos and v in pos and abs(pos[u] - pos[v]) == 1

    heights = np.zeros(len(core))
    sigma = np.full(tree.n, -1, dtype=np.intp)
    c0 = 0.0
    for i, v in enumerate(core):
        dist, _ = _sweep(tree.adj, v, spine_edge)
        sigma[list(dist)] = i
        heights[i] = max(dist.values())
        if len(dist) > 1:
            c0 = max(c0, _double_sweep(tree.adj, v, spine_edge)[2])
    return CaterpillarInstance(core, weights, heights, c0, tree.metric, sigma)


def _best_for_fixed_k(cat: CaterpillarInstance, k: int, inner: str):
    """Best ``(value, l)`` over spine non-edges ``(k, l)``, ``l >= k + 2``."""
    m = cat.m
    if inner == "scan":
        vals = [(caterpillar_diameter_with_shortcut(cat, k, l), l) for l in range(k + 2, m)]
        return min(vals)

    def parts(l):
        fp = caterpillar_four_parts(cat, k, l)
        return max(fp.S, fp.O), max(fp.E, fp.U)

    # first l where the rising part reaches the falling part
    lo, hi = k + 2, m
    while lo < hi:
        mid = (lo + hi) // 2
        up, down = parts(mid)
        if up >= down:
            hi = mid
        else:
            lo = mid + 1
    best = None
    for l in (lo - 1, lo):
        if k + 2 <= l < m:
            cand = (caterpillar_diameter_with_shortcut(cat, k, l), l)
            best = cand if best is None or cand < best else best
    return best


def tree_optimal_shortcut(tree: TreeInstance, inner: str = "scan") -> OptResult:
    """Shortcut minimising the diameter of ``tree``.

    ``inner="scan"`` tries every second endpoint; ``inner="bsearch"``
    binary-searches the crossing of the non-decreasing and non-increasing
    parts.  Returns no shortcut when ``P_T`` has at most two vertices.
    """
    if inner not in ("scan", "bsearch"):
        raise ValueError("inner must be 'scan' or 'bsearch'")
    if tree.n < 3:
        raise ValueError("a tree needs at least 3 vertices to admit a shortcut")
    lp = longest_path_data(tree)
    if len(lp.core) <= 2:
        return OptResult(None, lp.length, lp.length)
    cat = caterpillarize(tree, lp.core)
    best = None
    for k in range(cat.m - 2):
        val, l = _best_for_fixed_k(cat, k, inner)
        if best is None or (val, k, l) < best:
            best = (val, k, l)
    val, k, l = best
    u, v = int(cat.spine[k]), int(cat.spine[l])
    sc = Shortcut(min(u, v), max(u, v), tree.metric.distance(u, v))
    return OptResult(sc, float(val), lp.length)
