"""Trading accuracy for speed on long Euclidean paths.

The approximation collapses the path into a few hundred representatives and
only scores one candidate per well-separated pair, so its running time is
dominated by a term in 1/eps and hardly grows with n.
"""
import time

from diamaug import approx_optimal_shortcut, optimal_shortcut, random_path

for n in (2_000, 20_000, 100_000):
    path = random_path(n, seed=n)
    t0 = time.perf_counter()
    exact = optimal_shortcut(path)
    t1 = time.perf_counter()
    line = f"n={n:>6}: exact {exact.diameter:9.4f} ({t1 - t0:5.2f}s)"
    for eps in (0.5, 0.1):
        t0 = time.perf_counter()
        approx = approx_optimal_shortcut(path, eps)
        t1 = time.perf_counter()
        line += f" | eps={eps}: x{approx.diameter / exact.diameter:.4f} ({t1 - t0:4.2f}s)"
    print(line)
