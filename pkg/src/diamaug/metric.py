"""Metric spaces, path and tree instances, and prefix sums.

Indices in this Python API are 0-based.  The JSON file formats handled by
:mod:`diamaug.instances` are 1-based and convert on the way in and out.
"""
from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence

import numpy as np


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr.flags.writeable = False
    return arr


class MetricInstance:
    """A finite metric space given by coordinates or by a distance matrix.

    Exactly one of ``coords`` (an ``n x d`` array, Euclidean distances) or
    ``matrix`` (an ``n x n`` array) must be supplied.  Matrix inputs are not
    checked for the triangle inequality here; call :func:`validate_metric`.
    """

    def __init__(self, coords=None, matrix=None):
        if (coords is None) == (matrix is None):
            raise ValueError("give exactly one of coords or matrix")
        if coords is not None:
            c = np.array(coords, dtype=float)
            if c.ndim == 1:
                c = c[:, None]
            if c.ndim != 2:
                raise ValueError("coords must be an (n, d) array")
            if not np.all(np.isfinite(c)):
                raise ValueError("coords must be finite")
            self.coords: np.ndarray | None = _frozen(c)
            self.matrix: np.ndarray | None = None
            self.n = c.shape[0]
        else:
            m = np.array(matrix, dtype=float)
            if m.ndim != 2 or m.shape[0] != m.shape[1]:
                raise ValueError("distance matrix must be square")
            if not np.all(np.isfinite(m)) or np.any(m < 0):
                raise ValueError("distances must be finite and non-negative")
            self.coords = None
            self.matrix = _frozen(m)
            self.n = m.shape[0]

    @property
    def is_euclidean(self) -> bool:
        return self.coords is not None

    def _check(self, i) -> None:
        if np.any(np.asarray(i) < 0) or np.any(np.asarray(i) >= self.n):
            raise IndexError(f"vertex index out of range for n={self.n}")

    def distance(self, i: int, j: int) -> float:
        """Distance between points ``i`` and ``j``."""
        self._check(i)
        self._check(j)
        if self.matrix is not None:
            return float(self.matrix[i, j])
        diff = self.coords[i] - self.coords[j]
        return float(np.sqrt(diff @ diff))

    def distances(self, i, j) -> np.ndarray:
        """Vectorised :meth:`distance` over broadcastable index arrays."""
        i = np.asarray(i, dtype=np.intp)
        j = np.asarray(j, dtype=np.intp)
        if self.matrix is not None:
            return self.matrix[i, j]
        diff = self.coords[i] - self.coords[j]
        return np.sqrt(np.einsum("...k,...k->...", diff, diff))

    def distance_matrix(self) -> np.ndarray:
        if self.matrix is not None:
            return self.matrix
        idx = np.arange(self.n)
        return self.distances(idx[:, None], idx[None, :])

    def subset(self, idx: Sequence[int]) -> "MetricInstance":
        idx = np.asarray(idx, dtype=np.intp)
        if self.coords is not None:
            return MetricInstance(coords=self.coords[idx])
        return MetricInstance(matrix=self.matrix[np.ix_(idx, idx)])


def compute_prefix_sums(order: Sequence[int], metric: MetricInstance) -> np.ndarray:
    """Cumulative path length ``D`` with ``D[0] = 0`` and
    ``D[i+1] = D[i] + dist(p_i, p_{i+1})``."""
    order = np.asarray(order, dtype=np.intp)
    if order.size == 0:
        raise ValueError("path must have at least one vertex")
    D = np.zeros(order.size)
    if order.size > 1:
        np.cumsum(metric.distances(order[:-1], order[1:]), out=D[1:])
    return D


class PathInstance:
    """A path ``p_0, ..., p_{n-1}`` through the points of a metric space.

    ``order[i]`` is the metric point visited at path position ``i``; all
    algorithms work with path positions.  ``D`` holds the prefix sums.
    """

    def __init__(self, metric: MetricInstance, order: Sequence[int] | None = None):
        if order is None:
            order = np.arange(metric.n)
        order = np.asarray(order, dtype=np.intp)
        if order.ndim != 1 or order.size == 0:
            raise ValueError("order must be a non-empty sequence")
        if sorted(order.tolist()) != list(range(metric.n)):
            raise ValueError("order must be a permutation of the metric's points")
        self.metric = metric
        self.order = _frozen(order)
        self.D = _frozen(compute_prefix_sums(order, metric))
        self.n = order.size

    @classmethod
    def from_coords(cls, coords) -> "PathInstance":
        return cls(MetricInstance(coords=coords))

    @property
    def length(self) -> float:
        """Total path length ``|P|``."""
        return float(self.D[-1])

    def path_distance(self, k: int, l: int) -> float:
        return float(abs(self.D[l] - self.D[k]))

    def weight(self, k: int, l: int) -> float:
        """Metric distance between the points at path positions ``k`` and ``l``."""
        return self.metric.distance(int(self.order[k]), int(self.order[l]))

    def weights(self, k, l) -> np.ndarray:
        return self.metric.distances(self.order[np.asarray(k)], self.order[np.asarray(l)])


class TreeInstance:
    """A spanning tree on the points of a metric space.

    Edge ``(u, v)`` weighs ``metric.distance(u, v)``.
    """

    def __init__(self, metric: MetricInstance, edges: Iterable[tuple[int, int]]):
        n = metric.n
        if n == 0:
            raise ValueError("tree needs at least one vertex")
        edges = [(int(u), int(v)) for u, v in edges]
        if len(edges) != n - 1:
            raise ValueError(f"a tree on {n} vertices has {n - 1} edges, got {len(edges)}")
        adj: list[list[tuple[int, float]]] = [[] for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n) or u == v:
                raise ValueError(f"invalid edge ({u}, {v})")
            w = metric.distance(u, v)
            adj[u].append((v, w))
            adj[v].append((u, w))
        seen = [False] * n
        seen[0] = True
        queue = deque([0])
        while queue:
            u = queue.popleft()
            for v, _ in adj[u]:
                if not seen[v]:
                    seen[v] = True
                    queue.append(v)
        if not all(seen):
            raise ValueError("edges do not form a connected tree")
        self.metric = metric
        self.edges = tuple(edges)
        self.adj = tuple(tuple(a) for a in adj)
        self.n = n
        self._edge_set = frozenset(frozenset(e) for e in edges)

    def has_edge(self, u: int, v: int) -> bool:
        return frozenset((u, v)) in self._edge_set


def validate_metric(inst: MetricInstance, atol: float = 0.0) -> list[tuple]:
    """List every violation of the metric axioms in a matrix-backed instance.

    Returns tuples ``("diagonal", i)``, ``("symmetry", i, j)`` and
    ``("triangle", i, j, k)`` meaning ``d(i,k) > d(i,j) + d(j,k)``; an empty
    list means the matrix is a metric.  Coordinate inputs are always valid.
    """
    if inst.matrix is None:
        return []
    m = inst.matrix
    n = inst.n
    out: list[tuple] = []
    for i in np.flatnonzero(np.abs(np.diag(m)) > atol):
        out.append(("diagonal", int(i)))
    for i, j in zip(*np.nonzero(np.abs(m - m.T) > atol)):
        if i < j:
            out.append(("symmetry", int(i), int(j)))
    for j in range(n):
        # via[i, k] = d(i, j) + d(j, k)
        via = m[:, j][:, None] + m[j, :][None, :]
        bad = m > via + atol
        for i, k in zip(*np.nonzero(bad)):
            if i != j and k != j:
                out.append(("triangle", int(i), int(j), int(k)))
    return out
