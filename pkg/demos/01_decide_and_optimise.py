"""Deciding and optimising a single shortcut on a path.

We build a random path through 200 points in the unit square, ask whether
some shortcut gets the diameter down to a given threshold, and then let the
bisection driver find the best one.  The brute-force oracle confirms the
answer.
"""
from diamaug import brute_force_path, decide, optimal_shortcut, random_path
from diamaug.unicyclic import four_parts

path = random_path(200, seed=3)
print(f"path of {path.n} vertices, length |P| = {path.length:.4f}")

# A generous threshold is easy to meet; a tight one is not.
for frac in (0.9, 0.5, 0.2):
    lam = frac * path.length
    sc = decide(path, lam)
    verdict = "no shortcut" if sc is None else f"shortcut ({sc.k}, {sc.l})"
    print(f"  lambda = {frac:.1f}|P|: {verdict}")

res = optimal_shortcut(path)
sc = res.shortcut
print(f"\nbest shortcut ({sc.k}, {sc.l}) of weight {sc.weight:.4f}")
print(f"diameter {res.original_diameter:.4f} -> {res.diameter:.4f} after {res.iterations} bisection steps")

# The diameter splits into four parts; the largest one is the bottleneck.
fp = four_parts(path, sc.k, sc.l)
print(f"parts: S={fp.S:.4f} E={fp.E:.4f} U={fp.U:.4f} O={fp.O:.4f}")

ref = brute_force_path(path)
print(f"brute force over all {path.n * (path.n - 1) // 2 - path.n + 1} chords: {ref.optimum:.4f}")
