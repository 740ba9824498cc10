"""Diameter of a path or caterpillar with one extra edge.

The diameter of a path plus shortcut ``(k, l)`` is the maximum of four
quantities:

* ``S``: farthest cycle vertex from the start ``s``,
* ``E``: farthest cycle vertex from the end ``e``,
* ``U``: distance from ``s`` to ``e``,
* ``O``: diameter of the cycle itself.

All four are computed from the prefix sums ``D`` alone, so the same routine
serves the full path and the weighted representative path of the
approximation algorithm.

Every float expression here is written in a fixed association order that the
decision procedure in :mod:`diamaug.decision` reproduces verbatim, so a
threshold equal to an evaluated diameter is decided consistently.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .metric import MetricInstance, PathInstance

# element budget of one 2-D evaluation block
_BLOCK = 1 << 20


@dataclass(frozen=True)
class Shortcut:
    k: int
    l: int
    weight: float


@dataclass(frozen=True)
class FourPartValues:
    S: float
    E: float
    U: float
    O: float

    @property
    def M(self) -> float:
        return max(self.S, self.E, self.U, self.O)


def _blocks(width: np.ndarray):
    """Yield index groups, sorted by width, whose padded area fits a block."""
    order = np.argsort(width, kind="stable")
    start = 0
    while start < order.size:
        stop = start + 1
        # widths are sorted, so the last member sets the padded width
        while stop < order.size and (stop - start + 1) * width[order[stop]] <= _BLOCK:
            stop += 1
        yield order[start:stop]
        start = stop


def four_parts_from_prefix(D: np.ndarray, k, l, w):
    """Vectorised ``(S, E, U, O)`` for shortcuts ``(k[i], l[i])`` of weight ``w[i]``.

    ``D`` is a non-decreasing prefix-sum array; ``k < l`` elementwise.
    """
    D = np.asarray(D, dtype=float)
    k = np.atleast_1d(np.asarray(k, dtype=np.intp))
    l = np.atleast_1d(np.asarray(l, dtype=np.intp))
    w = np.atleast_1d(np.asarray(w, dtype=float))
    total = D[-1]
    S = np.empty(k.size)
    E = np.empty(k.size)
    O = np.empty(k.size)
    U = np.minimum(total, (D[k] + w) + (total - D[l]))
    width = l - k + 1
    for idx in _blocks(width):
        kb, lb, wb = k[idx], l[idx], w[idx]
        span = int(width[idx].max())
        X = np.minimum(kb[:, None] + np.arange(span)[None, :], lb[:, None])
        Dx = D[X]
        Dk = D[kb][:, None]
        Dl = D[lb][:, None]
        wc = wb[:, None]
        S[idx] = np.minimum(Dx, (Dk + wc) + (Dl - Dx)).max(axis=1)
        E[idx] = np.minimum(total - Dx, ((Dx - Dk) + wc) + (total - Dl)).max(axis=1)
        C = ((D[lb] - D[kb]) + wb)[:, None]
        # partner of x nearest to the antipode of x on the cycle
        j = np.searchsorted(D, Dx + C / 2, side="right") - 1
        best = np.zeros(kb.size)
        for off in (-1, 0, 1):
            y = np.minimum(np.maximum(j + off, X), lb[:, None])
            d = D[y] - Dx
            best = np.maximum(best, np.minimum(d, C - d).max(axis=1))
        O[idx] = best
    return S, E, U, O


def _check_path_shortcut(path: PathInstance, k: int, l: int) -> None:
    if not (0 <= k < l < path.n):
        raise ValueError(f"invalid shortcut ({k}, {l}) on a path of {path.n} vertices")
    if l == k + 1:
        raise ValueError(f"({k}, {l}) is already a path edge")


def four_parts(path: PathInstance, k: int, l: int) -> FourPartValues:
    """The four diameter components for shortcut ``(k, l)``."""
    _check_path_shortcut(path, k, l)
    S, E, U, O = four_parts_from_prefix(path.D, k, l, path.weight(k, l))
    return FourPartValues(float(S[0]), float(E[0]), float(U[0]), float(O[0]))


def path_diameter_with_shortcut(path: PathInstance, k: int, l: int) -> float:
    """Diameter of ``path`` plus the edge ``(k, l)`` in linear time."""
    return four_parts(path, k, l).M


def path_diameters(path: PathInstance, k, l) -> np.ndarray:
    """Vectorised :func:`path_diameter_with_shortcut` (no validation)."""
    k = np.atleast_1d(np.asarray(k, dtype=np.intp))
    l = np.atleast_1d(np.asarray(l, dtype=np.intp))
    S, E, U, O = four_parts_from_prefix(path.D, k, l, path.weights(k, l))
    return np.maximum(np.maximum(S, E), np.maximum(U, O))


def _running_max(a: np.ndarray) -> np.ndarray:
    return np.maximum.accumulate(a) if a.size else a


class CaterpillarInstance:
    """A spine with one pendant edge per spine vertex.

    ``spine[i]`` is the original tree vertex at spine position ``i``;
    ``spine_weights[i]`` is the tree distance from ``spine[i]`` to
    ``spine[i+1]``; ``heights[i]`` is the pendant length at ``spine[i]``.
    ``c0`` is a floor on the diameter that no shortcut on the spine can
    change (the largest diameter of a hanging component).  ``sigma`` maps
    every original vertex to the spine position of its component, or is
    ``None`` for hand-built caterpillars.
    """

    def __init__(self, spine, spine_weights, heights, c0=0.0, metric: MetricInstance | None = None,
                 sigma=None):
        self.spine = np.asarray(spine, dtype=np.intp)
        self.spine_weights = np.asarray(spine_weights, dtype=float)
        self.heights = np.asarray(heights, dtype=float)
        m = self.spine.size
        if m == 0 or self.spine_weights.size != m - 1 or self.heights.size != m:
            raise ValueError("inconsistent caterpillar dimensions")
        if np.any(self.heights < 0) or np.any(self.spine_weights < 0):
            raise ValueError("lengths must be non-negative")
        self.c0 = float(c0)
        self.metric = metric
        self.sigma = None if sigma is None else np.asarray(sigma, dtype=np.intp)
        self.m = m
        D = np.zeros(m)
        np.cumsum(self.spine_weights, out=D[1:])
        self.D = D
        h = self.heights
        ninf = np.full(1, -np.inf)
        # best_before[j] = max_{i<j} (h_i - D_i)
        best_before = np.concatenate([ninf, _running_max(h - D)[:-1]])
        # best_after[j] = max_{i>j} (h_i + D_i)
        best_after = np.concatenate([_running_max((h + D)[::-1])[::-1][1:], ninf])
        self.reach_left = D + best_before       # farthest pendant strictly left of j, measured to j
        self.reach_right = best_after - D       # same, strictly right of j
        self.intra_left = _running_max(h + self.reach_left)
        self.intra_right = _running_max((h + self.reach_right)[::-1])[::-1]

    @property
    def length(self) -> float:
        return float(self.D[-1])

    def weight(self, k: int, l: int) -> float:
        if self.metric is None:
            raise ValueError("caterpillar has no metric; pass the shortcut weight explicitly")
        return self.metric.distance(int(self.spine[k]), int(self.spine[l]))

    def diameter(self) -> float:
        """Diameter without any shortcut."""
        if self.m == 1:
            return max(self.c0, float(self.heights[0]))
        return float(max(self.c0, self.intra_left[-1]))


def caterpillar_four_parts(cat: CaterpillarInstance, k: int, l: int, weight: float | None = None
                           ) -> FourPartValues:
    """Four-part values of ``cat`` plus the spine shortcut ``(k, l)``.

    Pairs are split by where their spine attachments fall: both left of the
    cycle or one left and one on it (``S``), the mirror image (``E``), one on
    each side (``U``), both on the cycle (``O``).  ``O`` is quadratic in the
    cycle size.
    """
    if not (0 <= k < l < cat.m):
        raise ValueError(f"invalid spine shortcut ({k}, {l}) for spine of {cat.m} vertices")
    w = cat.weight(k, l) if weight is None else float(weight)
    D, h = cat.D, cat.heights
    C = (D[l] - D[k]) + w
    cyc = np.arange(k, l + 1)
    pos = D[cyc] - D[k]
    # cycle distances from k and to l
    from_k = np.minimum(pos, C - pos)
    to_l = np.minimum(D[l] - D[cyc], C - (D[l] - D[cyc]))
    ninf = -np.inf
    left, right = cat.reach_left[k], cat.reach_right[l]
    S = max(cat.intra_left[k], left + (from_k[1:] + h[cyc[1:]]).max())
    E = max(cat.intra_right[l], right + (to_l[:-1] + h[cyc[:-1]]).max())
    U = left + min(D[l] - D[k], w) + right
    d = pos[None, :] - pos[:, None]
    pair = h[cyc][:, None] + np.minimum(d, C - d) + h[cyc][None, :]
    O = pair[np.triu_indices(cyc.size, 1)].max() if cyc.size > 1 else ninf
    vals = [float(v) if np.isfinite(v) else 0.0 for v in (S, E, U, O)]
    return FourPartValues(*vals)


def caterpillar_diameter_with_shortcut(cat: CaterpillarInstance, k: int, l: int,
                                       weight: float | None = None) -> float:
    """Diameter of the caterpillar plus ``(k, l)``, floored by ``cat.c0``."""
    return max(caterpillar_four_parts(cat, k, l, weight).M, cat.c0)
