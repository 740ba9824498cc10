import numpy as np
import pytest

from diamaug import augmented_diameter_dijkstra, brute_force_path, brute_force_tree, random_tree
from diamaug.oracle import all_pairs_dijkstra, path_edges, tree_edges
from conftest import line_path, path_tree, square_path, star_tree

# regression constants produced once by the brute-force oracle itself
HEXAGON_OPT = 3.0
TREE_SEED20_N20_OPT = 3.609235289103916


def test_square_plus_closing_edge():
    p = square_path()
    assert augmented_diameter_dijkstra(4, path_edges(p), (0, 3, 1.0)) == 2.0


def test_collinear_chord():
    p = line_path([0, 1, 3, 4])
    assert augmented_diameter_dijkstra(4, path_edges(p), (0, 2, 3.0)) == 4.0


def test_duplicate_tree_edge_changes_nothing():
    t = random_tree(12, 3)
    u, v = t.edges[0]
    base = augmented_diameter_dijkstra(t.n, tree_edges(t))
    assert augmented_diameter_dijkstra(t.n, tree_edges(t), (u, v, t.metric.distance(u, v))) == base


def test_zero_weight_edges_count():
    d = all_pairs_dijkstra(3, [(0, 1, 0.0), (1, 2, 1.0)])
    assert d[0, 2] == 1.0


def test_parallel_edges_keep_lightest():
    d = all_pairs_dijkstra(2, [(0, 1, 5.0)], (1, 0, 2.0))
    assert d[0, 1] == 2.0


def test_disconnected_raises():
    with pytest.raises(ValueError):
        augmented_diameter_dijkstra(3, [(0, 1, 1.0)])


def test_brute_square():
    r = brute_force_path(square_path())
    assert r.optimum == 2.0 and r.best_shortcuts == [(0, 3)]


def test_brute_collinear_all_optimal():
    p = line_path([0, 1, 2, 3, 4])
    r = brute_force_path(p, keep_values=True)
    assert r.optimum == p.length
    assert len(r.best_shortcuts) == len(r.values) == 6


def test_brute_hexagon_regression():
    t = np.arange(6) * np.pi / 3
    from diamaug import PathInstance
    p = PathInstance.from_coords(np.c_[np.cos(t), np.sin(t)])
    assert brute_force_path(p).optimum == pytest.approx(HEXAGON_OPT, abs=1e-12)


def test_brute_star():
    r = brute_force_tree(star_tree(), keep_values=True)
    assert r.optimum == pytest.approx(2.0)
    assert len(r.values) == 3


def test_brute_path_tree_equals_path():
    from conftest import seeded_paths
    for p in seeded_paths(3, 5, 12, 40):
        assert brute_force_tree(path_tree(p)).optimum == pytest.approx(brute_force_path(p).optimum, abs=1e-12)


def test_brute_tree_regression():
    assert brute_force_tree(random_tree(20, 20)).optimum == pytest.approx(TREE_SEED20_N20_OPT, abs=1e-12)


def test_too_small():
    with pytest.raises(ValueError):
        brute_force_path(line_path([0, 1]))
