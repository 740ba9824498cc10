"""(1 + eps)-approximate optimal shortcut for Euclidean paths.

The path is cut into windows of length ``eps1 * |P|``; the first vertex of
each window represents it.  The representatives, placed on a line at their
path coordinates, get a well-separated pair decomposition with separation
``1 / eps2``, and one candidate shortcut per pair is scored on the
representative path.  The winner is re-scored on the full path.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .metric import PathInstance
from .optimize import OptResult
from .unicyclic import Shortcut, four_parts_from_prefix, path_diameter_with_shortcut
from .wspd import build_split_tree, compute_wspd


@dataclass(frozen=True)
class ApproxConfig:
    eps: float

    def __post_init__(self):
        if not 0 < self.eps < 1:
            raise ValueError("eps must lie in (0, 1)")

    @property
    def eps1(self) -> float:
        return self.eps / 60

    @property
    def eps2(self) -> float:
        return self.eps / 32

    @property
    def separation(self) -> float:
        return 1 / self.eps2

    @property
    def windows(self) -> int:
        return math.ceil(1 / self.eps1)


@dataclass(frozen=True)
class RepresentativePath:
    reps: np.ndarray     # path positions, strictly increasing
    coords: np.ndarray   # D[reps]

    @property
    def edge_weights(self) -> np.ndarray:
        return np.diff(self.coords)


def window_index(path: PathInstance, eps1: float) -> np.ndarray:
    """Window of every vertex; the last window is closed at ``|P|``."""
    total = path.length
    m = math.ceil(1 / eps1)
    return np.minimum(np.floor(path.D / (eps1 * total)).astype(np.intp), m - 1)


def build_representatives(path: PathInstance, cfg: ApproxConfig | None = None, *,
                          eps1: float | None = None) -> RepresentativePath:
    """First vertex of every non-empty window.  Pass ``cfg`` or an explicit
    window fraction ``eps1``."""
    if eps1 is None:
        if cfg is None:
            raise ValueError("give cfg or eps1")
        eps1 = cfg.eps1
    if not eps1 > 0:
        raise ValueError("eps1 must be positive")
    if path.n < 2 or path.length <= 0:
        raise ValueError("need a path of positive length")
    win = window_index(path, eps1)
    # windows are non-decreasing along the path; keep the first vertex of each
    first = np.flatnonzero(np.r_[True, win[1:] != win[:-1]])
    return RepresentativePath(first, path.D[first])


def representative_of(path: PathInstance, rp: RepresentativePath, cfg: ApproxConfig) -> np.ndarray:
    """Index into ``rp.reps`` of the representative of each vertex's window."""
    win = window_index(path, cfg.eps1)
    rep_win = win[rp.reps]
    return np.searchsorted(rep_win, win)


def candidate_pairs(rp: RepresentativePath, cfg: ApproxConfig):
    """WSPD pairs on the straightened representatives as ``(i, j)`` arrays
    of representative indices with ``i < j``."""
    pairs = compute_wspd(build_split_tree(rp.coords), cfg.separation)
    if not pairs:
        return np.zeros(0, dtype=np.intp), np.zeros(0, dtype=np.intp), pairs
    a = np.array([p.rep_a for p in pairs], dtype=np.intp)
    b = np.array([p.rep_b for p in pairs], dtype=np.intp)
    return np.minimum(a, b), np.maximum(a, b), pairs


def approx_optimal_shortcut(path: PathInstance, eps: float) -> OptResult:
    """Shortcut whose diameter is at most ``(1 + eps)`` times optimal."""
    cfg = ApproxConfig(eps)
    if not path.metric.is_euclidean:
        raise ValueError("the approximation needs coordinate (Euclidean) input")
    if path.n < 3:
        raise ValueError("a path needs at least 3 vertices to admit a shortcut")
    total = path.length
    if total <= 0:
        return OptResult(Shortcut(0, 2, path.weight(0, 2)), 0.0, 0.0)
    rp = build_representatives(path, cfg)
    i, j, _ = candidate_pairs(rp, cfg)
    k, l = rp.reps[i], rp.reps[j]
    keep = l >= k + 2
    i, j, k, l = i[keep], j[keep], k[keep], l[keep]
    if k.size == 0:
        return OptResult(None, total, total)
    w = path.weights(k, l)
    S, E, U, O = four_parts_from_prefix(rp.coords, i, j, w)
    score = np.maximum(np.maximum(S, E), np.maximum(U, O))
    best = np.lexsort((l, k, score))[0]
    kb, lb = int(k[best]), int(l[best])
    diameter = path_diameter_with_shortcut(path, kb, lb)
    return OptResult(Shortcut(kb, lb, float(w[best])), diameter, total)
