"""Shortcutting a tree.

Every longest path of a tree runs through a common core.  Collapsing what
hangs off the core gives a caterpillar, and the best shortcut joins two core
vertices.  We show the pieces and check the result against brute force.
"""
from diamaug import brute_force_tree, caterpillarize, longest_path_data, random_tree, tree_optimal_shortcut

tree = random_tree(40, seed=5)
lp = longest_path_data(tree)
print(f"tree on {tree.n} vertices, diameter {lp.length:.4f}")
print(f"a longest path has {len(lp.diameter_path)} vertices; the common core has {len(lp.core)}")

cat = caterpillarize(tree, lp.core)
print("pendant heights along the core:", " ".join(f"{h:.2f}" for h in cat.heights))
print(f"widest hanging component has diameter {cat.c0:.4f}")

for inner in ("scan", "bsearch"):
    res = tree_optimal_shortcut(tree, inner=inner)
    print(f"{inner:>7}: shortcut {res.shortcut.k}-{res.shortcut.l}, diameter {res.diameter:.4f}")

print(f" brute: {brute_force_tree(tree).optimum:.4f}")
