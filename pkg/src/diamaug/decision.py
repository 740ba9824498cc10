"""Decide whether some shortcut brings a path's diameter down to ``lam``.

For a fixed threshold ``lam`` the procedure precomputes, in O(n log n):

* ``s_prime``: the last vertex within ``lam`` of the start,
* ``e_prime``: the first vertex within ``lam`` of the end,
* for every vertex ``x`` farther than ``lam`` from the end, the first
  vertex ``x'`` strictly more than ``lam`` beyond it and the defect
  ``D[x'] - (D[x] + lam)``,
* a sparse table answering range minima of the defects.

For each left endpoint ``k`` the smallest right endpoint ``l_k`` that keeps
``S``, ``E`` and ``U`` within ``lam`` is found by binary search, and the cycle
part is settled with a single range-minimum query.  The loop over ``k`` is
evaluated for all ``k`` at once with vectorised binary searches.

The threshold comparisons use the exact float expressions of
:mod:`diamaug.unicyclic`; the cycle test compares ``|C| - (D[x'] - D[x])``
against ``lam``, which is the defect inequality with ``lam`` moved across.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .metric import PathInstance
from .rmq import SparseTableMin
from .unicyclic import Shortcut


def first_true(lo, hi, pred):
    """Row-wise lower bound over ``[lo, hi)``.

    ``pred(rows, i)`` evaluates a predicate that is monotone
    (false then true) along ``i`` for each row in ``rows``.  Returns the
    first index where it holds, or ``hi`` if it never does.
    """
    lo = np.array(lo, dtype=np.intp, copy=True)
    hi = np.array(hi, dtype=np.intp, copy=True)
    rows = np.flatnonzero(lo < hi)
    while rows.size:
        mid = (lo[rows] + hi[rows]) // 2
        ok = np.asarray(pred(rows, mid), dtype=bool)
        hi[rows[ok]] = mid[ok]
        lo[rows[~ok]] = mid[~ok] + 1
        rows = rows[lo[rows] < hi[rows]]
    return lo


@dataclass(frozen=True)
class DecisionContext:
    lam: float
    D: np.ndarray
    s_prime: int
    e_prime: int
    partner: np.ndarray   # x' per vertex, -1 where undefined
    reach: np.ndarray     # D[x'] - D[x], +inf where undefined
    rmq: SparseTableMin   # range minima of reach

    @property
    def defect(self) -> np.ndarray:
        """``D[x'] - (D[x] + lam)``; ``+inf`` where ``x'`` does not exist."""
        return self.reach - self.lam


def build_context(path: PathInstance, lam: float) -> DecisionContext:
    if not lam > 0:
        raise ValueError("lam must be positive")
    D = path.D
    n = path.n
    total = D[-1]
    s_prime = int(np.searchsorted(D, lam, side="right")) - 1
    # D - total is the exact negation of total - D, so this is
    # min{v : total - D[v] <= lam}
    e_prime = int(np.searchsorted(D - total, -lam, side="left"))
    xs = np.flatnonzero((total - D) > lam)
    partner = np.full(n, -1, dtype=np.intp)
    reach = np.full(n, np.inf)
    if xs.size:
        px = first_true(xs + 1, np.full(xs.size, n), lambda r, v: (D[v] - D[xs[r]]) > lam)
        partner[xs] = px
        reach[xs] = D[px] - D[xs]
    partner.flags.writeable = False
    reach.flags.writeable = False
    return DecisionContext(float(lam), D, s_prime, e_prime, partner, reach, SparseTableMin(reach))


def _s_ok(ctx, path, k, l, w):
    D = ctx.D
    x = np.maximum(k, ctx.s_prime + 1)
    x = np.minimum(x, l)
    return (l <= ctx.s_prime) | (((D[k] + w) + (D[l] - D[x])) <= ctx.lam)


def _e_ok(ctx, path, k, l, w):
    D = ctx.D
    total = D[-1]
    x = np.minimum(l, ctx.e_prime - 1)
    x = np.maximum(x, k)
    return (k >= ctx.e_prime) | ((((D[x] - D[k]) + w) + (total - D[l])) <= ctx.lam)


def _u_ok(ctx, path, k, l, w):
    D = ctx.D
    total = D[-1]
    return np.minimum(total, (D[k] + w) + (total - D[l])) <= ctx.lam


def _eu_first(ctx, path, k):
    """Smallest non-edge ``l > k + 1`` with ``E`` and ``U`` within ``lam`` (``n`` if none)."""
    n = path.n

    def pred(rows, l):
        kk = k[rows]
        w = path.weights(kk, l)
        return _e_ok(ctx, path, kk, l, w) & _u_ok(ctx, path, kk, l, w)

    return first_true(k + 2, np.full(k.size, n), pred)


def _s_first_bad(ctx, path, k):
    """Smallest non-edge ``l > k + 1`` with ``S`` above ``lam`` (``n`` if none)."""
    n = path.n

    def pred(rows, l):
        kk = k[rows]
        return ~_s_ok(ctx, path, kk, l, path.weights(kk, l))

    return first_true(k + 2, np.full(k.size, n), pred)


def n_feasible_interval(ctx: DecisionContext, path: PathInstance, k: int):
    """``(lo, hi)`` such that exactly the non-edges ``(k, l)`` with
    ``lo <= l <= hi`` keep ``S``, ``E`` and ``U`` within ``lam``; ``None`` if
    there are none."""
    if not 0 <= k < path.n - 1:
        raise IndexError(f"k={k} out of range")
    ka = np.array([k], dtype=np.intp)
    lo = int(_eu_first(ctx, path, ka)[0])
    hi = int(_s_first_bad(ctx, path, ka)[0]) - 1
    if lo >= path.n or lo > hi:
        return None
    return lo, hi


def check_o_many(ctx: DecisionContext, path: PathInstance, k, l, w=None):
    """Vectorised cycle test: is ``O(k, l) <= lam``?

    Only meaningful when ``S``, ``E`` and ``U`` are already within ``lam``.
    """
    D = ctx.D
    lam = ctx.lam
    k = np.asarray(k, dtype=np.intp)
    l = np.asarray(l, dtype=np.intp)
    if w is None:
        w = path.weights(k, l)
    C = (D[l] - D[k]) + w
    # K' = {x in [k, l] : D[x] - D[k] <= lam and D[l] - D[x] > lam}, a prefix of [k, l]
    near_k = first_true(k, l + 1, lambda r, x: (D[x] - D[k[r]]) > lam) - 1
    far_l = first_true(k, l + 1, lambda r, x: (D[l[r]] - D[x]) <= lam) - 1
    end = np.minimum(near_k, far_l)
    empty = end < k
    shortest = ctx.rmq.query(k, np.maximum(end + 1, k))
    return empty | ((C - shortest) <= lam)


def check_o_for_shortcut(ctx: DecisionContext, path: PathInstance, k: int, l: int) -> bool:
    return bool(check_o_many(ctx, path, np.array([k]), np.array([l]))[0])


def _decide_range(ctx, path, ks):
    if ks.size == 0:
        return None
    lk = _eu_first(ctx, path, ks)
    has = lk < path.n
    ks, lk = ks[has], lk[has]
    w = path.weights(ks, lk)
    keep = _s_ok(ctx, path, ks, lk, w)
    ks, lk, w = ks[keep], lk[keep], w[keep]
    good = np.flatnonzero(check_o_many(ctx, path, ks, lk, w))
    if good.size == 0:
        return None
    i = good[0]
    return Shortcut(int(ks[i]), int(lk[i]), float(w[i]))


def decide(path: PathInstance, lam: float, workers: int = 1, ctx: DecisionContext | None = None):
    """Return a shortcut with augmented diameter at most ``lam``, or ``None``.

    Only non-edges ``l >= k + 2`` are considered, so paths with fewer than
    three vertices always give ``None``.  Among feasible shortcuts the one
    with the smallest ``k`` (and for it the smallest ``l``) is returned,
    independent of ``workers``.
    """
    if not lam > 0:
        raise ValueError("lam must be positive")
    if path.n < 3:
        return None
    if ctx is None:
        ctx = build_context(path, lam)
    ks = np.arange(path.n - 2, dtype=np.intp)
    if workers <= 1:
        return _decide_range(ctx, path, ks)
    parts = np.array_split(ks, workers)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(lambda part: _decide_range(ctx, path, part), parts))
    return next((r for r in results if r is not None), None)
