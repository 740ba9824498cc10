"""Static range-minimum queries over a float array using a sparse table."""
from __future__ import annotations

import numpy as np


class SparseTableMin:
    """Answer ``min(data[start:stop])`` in O(1) after O(n log n) preprocessing.

    Queries are vectorised: ``start`` and ``stop`` may be arrays.  Empty
    ranges return ``+inf``.  The input is copied; later changes to it are not
    seen.
    """

    def __init__(self, data):
        data = np.array(data, dtype=float)
        if data.ndim != 1:
            raise ValueError("data must be one-dimensional")
        n = data.size
        levels = max(1, int(n).bit_length())
        # table[d, i] = min(data[i : i + 2**d]); tails padded with +inf
        table = np.full((levels, max(n, 1)), np.inf)
        table[0, :n] = data
        for d in range(1, levels):
            half = 1 << (d - 1)
            table[d, : n - half] = np.minimum(table[d - 1, : n - half], table[d - 1, half:n])
        table.flags.writeable = False
        self.table = table
        self.n = n

    def query(self, start, stop):
        start = np.asarray(start, dtype=np.intp)
        stop = np.asarray(stop, dtype=np.intp)
        length = stop - start
        empty = length <= 0
        safe = np.where(empty, 1, length)
        depth = np.floor(np.log2(safe)).astype(np.intp)
        # guard against log2 rounding at exact powers of two
        depth -= (np.left_shift(1, depth) > safe)
        depth += (np.left_shift(1, depth + 1) <= safe)
        lo = np.where(empty, 0, start)
        hi = np.where(empty, 0, stop - np.left_shift(1, depth))
        out = np.minimum(self.table[depth, lo], self.table[depth, hi])
        out = np.where(empty, np.inf, out)
        return out if out.ndim else float(out)

    __call__ = query
