"""Well-separated pair decomposition of points on a line.

Points are given as a sorted coordinate array, so every node of the split
tree is an index interval ``[lo, hi)`` of that array.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass
class SplitTree:
    """Fair-split tree stored as parallel arrays; node 0 is the root.

    ``left[i] == right[i] == -1`` marks a leaf.
    """

    coords: np.ndarray
    lo: list[int]
    hi: list[int]
    left: list[int]
    right: list[int]

    def __len__(self) -> int:
        return len(self.lo)

    def is_leaf(self, i: int) -> bool:
        return self.left[i] < 0

    def extent(self, i: int) -> tuple[float, float]:
        return float(self.coords[self.lo[i]]), float(self.coords[self.hi[i] - 1])


@dataclass(frozen=True)
class WspdPair:
    a: tuple[int, int]   # index interval [lo, hi) of the sorted coordinates
    b: tuple[int, int]
    rep_a: int
    rep_b: int

    def members(self):
        return range(*self.a), range(*self.b)


def build_split_tree(coords) -> SplitTree:
    """Split tree with cuts at the midpoint of each node's bounding interval.

    A node whose points all coincide is split by halving its index range.
    """
    coords = np.asarray(coords, dtype=float)
    if coords.ndim != 1 or coords.size == 0:
        raise ValueError("need a non-empty 1-d coordinate array")
    if np.any(np.diff(coords) < 0):
        raise ValueError("coordinates must be sorted ascending")
    tree = SplitTree(coords, [0], [coords.size], [-1], [-1])
    stack = [0]
    while stack:
        i = stack.pop()
        lo, hi = tree.lo[i], tree.hi[i]
        if hi - lo == 1:
            continue
        a, b = coords[lo], coords[hi - 1]
        cut = lo + int(np.searchsorted(coords[lo:hi], 0.5 * (a + b), side="right"))
        if not lo < cut < hi:
            cut = (lo + hi) // 2
        for clo, chi in ((lo, cut), (cut, hi)):
            tree.lo.append(clo)
            tree.hi.append(chi)
            tree.left.append(-1)
            tree.right.append(-1)
        tree.left[i] = len(tree.lo) - 2
        tree.right[i] = len(tree.lo) - 1
        stack.extend((tree.left[i], tree.right[i]))
    return tree


def _ball(coords, lo, hi):
    a, b = coords[lo], coords[hi - 1]
    return 0.5 * (a + b), 0.5 * (b - a)


def well_separated(coords, ia: tuple[int, int], ib: tuple[int, int], s: float) -> bool:
    """Do the two index intervals fit in disjoint equal-radius balls at
    distance at least ``s`` times the radius?"""
    ca, ra = _ball(coords, *ia)
    cb, rb = _ball(coords, *ib)
    r = max(ra, rb)
    return abs(ca - cb) - 2 * r >= s * r


def compute_wspd(tree: SplitTree, s: float) -> list[WspdPair]:
    """Pair up the children of every internal node, refining the node with
    the longer bounding interval until the two sides are well separated."""
    if not s > 0:
        raise ValueError("separation s must be positive")
    c = tree.coords.tolist()   # plain floats keep the inner loop cheap
    lo, hi, left, right = tree.lo, tree.hi, tree.left, tree.right
    pairs: list[WspdPair] = []
    todo = [(left[i], right[i]) for i in range(len(tree)) if left[i] >= 0]
    while todo:
        u, v = todo.pop()
        ua, ub, va, vb = c[lo[u]], c[hi[u] - 1], c[lo[v]], c[hi[v] - 1]
        len_u, len_v = ub - ua, vb - va
        # same test as well_separated, unrolled
        r = 0.5 * max(len_u, len_v)
        if abs(0.5 * (ua + ub) - 0.5 * (va + vb)) - 2 * r >= s * r:
            pairs.append(WspdPair((lo[u], hi[u]), (lo[v], hi[v]), lo[u], lo[v]))
            continue
        if (len_u >= len_v and left[u] >= 0) or left[v] < 0:
            todo.append((left[u], v))
            todo.append((right[u], v))
        else:
            todo.append((u, left[v]))
            todo.append((u, right[v]))
    return pairs


def wspd(coords, s: float) -> list[WspdPair]:
    return compute_wspd(build_split_tree(coords), s)


def validate_wspd(coords, pairs, s: float) -> bool:
    """Exhaustively check disjointness, exactly-once coverage of every
    unordered point pair, and ``s``-separation."""
    coords = np.asarray(coords, dtype=float)
    n = coords.size
    cover = np.zeros((n, n), dtype=np.int32)
    for p in pairs:
        (alo, ahi), (blo, bhi) = p.a, p.b
        if not (0 <= alo < ahi <= n and 0 <= blo < bhi <= n):
            return False
        if alo < bhi and blo < ahi:
            return False
        if not well_separated(coords, p.a, p.b, s):
            return False
        cover[alo:ahi, blo:bhi] += 1
    cover = cover + cover.T
    off = ~np.eye(n, dtype=bool)
    return bool(np.all(cover[off] == 1))
