"""Brute-force references: exhaustive shortcut enumeration and Dijkstra diameters."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import dijkstra

from .metric import PathInstance, TreeInstance
from .unicyclic import path_diameters

TIE_TOL = 1e-12


@dataclass(frozen=True)
class OracleResult:
    optimum: float
    best_shortcuts: list[tuple[int, int]] = field(default_factory=list)
    values: dict | None = None


def all_pairs_dijkstra(n: int, edges, extra=None) -> np.ndarray:
    """All-pairs shortest-path distances of an undirected weighted graph.

    ``edges`` and ``extra`` hold ``(u, v, w)`` triples.  Zero weights are kept
    as edges; parallel edges keep the lightest copy.
    """
    triples = list(edges)
    if extra is not None:
        triples.append(tuple(extra))
    if not triples:
        return dijkstra(csr_matrix((n, n)), directed=False)
    u, v, w = (np.asarray(t) for t in zip(*triples))
    u = u.astype(np.intp)
    v = v.astype(np.intp)
    w = w.astype(float)
    key = np.concatenate([u * n + v, v * n + u])
    wt = np.concatenate([w, w])
    order = np.lexsort((wt, key))
    key, wt = key[order], wt[order]
    first = np.ones(key.size, dtype=bool)
    first[1:] = key[1:] != key[:-1]
    key, wt = key[first], wt[first]
    graph = csr_matrix((wt, (key // n, key % n)), shape=(n, n))
    return dijkstra(graph, directed=False)


def augmented_diameter_dijkstra(n: int, edges, extra=None) -> float:
    """Diameter of the graph ``edges`` plus the optional edge ``extra``."""
    dist = all_pairs_dijkstra(n, edges, extra)
    if not np.all(np.isfinite(dist)):
        raise ValueError("graph is disconnected")
    return float(dist.max()) if n else 0.0


def path_edges(path: PathInstance):
    return [(i, i + 1, float(path.D[i + 1] - path.D[i])) for i in range(path.n - 1)]


def tree_edges(tree: TreeInstance):
    return [(u, v, tree.metric.distance(u, v)) for u, v in tree.edges]


def path_diameter_dijkstra(path: PathInstance, k: int, l: int) -> float:
    return augmented_diameter_dijkstra(path.n, path_edges(path), (k, l, path.weight(k, l)))


def brute_force_path(path: PathInstance, keep_values: bool = False) -> OracleResult:
    """Evaluate every non-edge ``(k, l)``, ``l >= k + 2``, of the path."""
    n = path.n
    if n < 3:
        raise ValueError("a path needs at least 3 vertices to admit a shortcut")
    k, l = np.triu_indices(n, 2)
    vals = path_diameters(path, k, l)
    opt = float(vals.min())
    hit = np.flatnonzero(vals <= opt + TIE_TOL)
    best = [(int(k[i]), int(l[i])) for i in hit]
    values = {(int(a), int(b)): float(v) for a, b, v in zip(k, l, vals)} if keep_values else None
    return OracleResult(opt, best, values)


def brute_force_tree(tree: TreeInstance, keep_values: bool = False) -> OracleResult:
    """Evaluate every non-edge of the tree with Dijkstra."""
    n = tree.n
    if n < 3:
        raise ValueError("a tree needs at least 3 vertices to admit a shortcut")
    edges = tree_edges(tree)
    values = {}
    for u in range(n):
        for v in range(u + 1, n):
            if tree.has_edge(u, v):
                continue
            values[(u, v)] = augmented_diameter_dijkstra(n, edges, (u, v, tree.metric.distance(u, v)))
    opt = min(values.values())
    best = [pair for pair, val in values.items() if val <= opt + TIE_TOL]
    return OracleResult(opt, best, values if keep_values else None)
