"""A well-separated pair decomposition on the line.

Sorted coordinates are split at bounding-interval midpoints; pairs of tree
nodes are refined until they sit far apart relative to their size.  The
pair count grows linearly in n for fixed separation.
"""
import numpy as np

from diamaug import validate_wspd, wspd

rng = np.random.default_rng(0)
for s in (2, 8, 32):
    for n in (100, 400, 1600):
        x = np.sort(rng.random(n))
        pairs = wspd(x, s)
        ok = validate_wspd(x, pairs, s) if n <= 400 else "skipped"
        print(f"s={s:>2} n={n:>5}: {len(pairs):>6} pairs, {len(pairs) / (s * n):.3f} per s*n, valid: {ok}")

x = np.array([0.0, 0.1, 0.2, 5.0, 5.1, 9.0])
print("\npairs for", x.tolist())
for p in wspd(x, 4):
    print("  ", x[slice(*p.a)].tolist(), "<->", x[slice(*p.b)].tolist())
