"""Optimal shortcut for a path by bisection over the decision threshold."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .decision import _eu_first, build_context, decide
from .metric import PathInstance
from .unicyclic import Shortcut, path_diameter_with_shortcut, path_diameters


@dataclass(frozen=True)
class OptResult:
    shortcut: Shortcut | None
    diameter: float
    original_diameter: float
    iterations: int = 0
    lambda_bracket: tuple[float, float] | None = None


def optimal_shortcut(path: PathInstance, rel_tol: float = 1e-12, max_iter: int = 200,
                     workers: int = 1, exact: bool = False, trace: list | None = None) -> OptResult:
    """Shortcut minimising the diameter of ``path``.

    Keeps a bracket ``(lo, hi]`` where ``decide(hi)`` succeeds and
    ``decide(lo)`` fails (``lo = 0`` trivially) and halves it until
    ``hi - lo <= rel_tol * |P|``.  The returned diameter is evaluated exactly
    for the returned shortcut, so it is attained and at most
    ``m(P) + rel_tol * |P|``.

    With ``exact=True`` a final sweep evaluates, for every feasible left
    endpoint at ``hi``, the shortcuts next to its smallest feasible right
    endpoint and keeps the smallest attained diameter.

    ``trace``, if given, receives one ``(lam, feasible)`` tuple per decision
    call.
    """
    if path.n < 3:
        raise ValueError("a path needs at least 3 vertices to admit a shortcut")
    if not rel_tol > 0:
        raise ValueError("rel_tol must be positive")
    total = path.length
    if total == 0:
        sc = Shortcut(0, 2, path.weight(0, 2))
        return OptResult(sc, 0.0, 0.0, 0, (0.0, 0.0))

    best = decide(path, total, workers=workers)
    if trace is not None:
        trace.append((total, best is not None))
    if best is None:
        return OptResult(None, total, total, 0, (0.0, total))
    lo, hi = 0.0, total
    it = 0
    while hi - lo > rel_tol * total and it < max_iter:
        mid = 0.5 * (lo + hi)
        if not lo < mid < hi:
            break
        sc = decide(path, mid, workers=workers)
        it += 1
        if trace is not None:
            trace.append((mid, sc is not None))
        if sc is None:
            lo = mid
        else:
            hi, best = mid, sc
    diameter = path_diameter_with_shortcut(path, best.k, best.l)
    if exact:
        best, diameter = _local_sweep(path, hi, best, diameter)
    return OptResult(best, diameter, total, it, (lo, hi))


def _local_sweep(path, lam, best, diameter, radius=2):
    ctx = build_context(path, lam)
    ks = np.arange(path.n - 2, dtype=np.intp)
    lk = _eu_first(ctx, path, ks)
    has = lk < path.n
    ks, lk = ks[has], lk[has]
    cand_k, cand_l = [], []
    for off in range(-radius, radius + 1):
        l = lk + off
        ok = (l >= ks + 2) & (l < path.n)
        cand_k.append(ks[ok])
        cand_l.append(l[ok])
    cand_k = np.concatenate(cand_k)
    cand_l = np.concatenate(cand_l)
    if cand_k.size == 0:
        return best, diameter
    vals = path_diameters(path, cand_k, cand_l)
    # lexicographically smallest (k, l) among ties
    order = np.lexsort((cand_l, cand_k, vals))
    i = order[0]
    if vals[i] < diameter:
        k, l = int(cand_k[i]), int(cand_l[i])
        return Shortcut(k, l, path.weight(k, l)), float(vals[i])
    return best, diameter
