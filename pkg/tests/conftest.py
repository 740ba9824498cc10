import numpy as np
import pytest

from diamaug import MetricInstance, PathInstance, TreeInstance, random_path, random_tree

FAMILIES = ("uniform-square", "circle", "collinear")


def square_path():
    return PathInstance.from_coords([[0, 0], [1, 0], [1, 1], [0, 1]])


def line_path(xs):
    xs = np.asarray(xs, dtype=float)
    return PathInstance.from_coords(np.column_stack([xs, np.zeros_like(xs)]))


def star_tree(arms=3, length=1.0):
    pts = [[0.0, 0.0]]
    for a in range(arms):
        t = 2 * np.pi * a / arms
        pts.append([length * np.cos(t), length * np.sin(t)])
    return TreeInstance(MetricInstance(coords=pts), [(0, i) for i in range(1, arms + 1)])


def path_tree(path: PathInstance):
    """The path as a tree over the same points (order must be the identity)."""
    return TreeInstance(path.metric, [(i, i + 1) for i in range(path.n - 1)])


def seeded_paths(count, n_lo, n_hi, seed):
    """Deterministic mix of path instances over all families."""
    rng = np.random.default_rng(seed)
    out = []
    for i in range(count):
        n = int(rng.integers(n_lo, n_hi + 1))
        out.append(random_path(n, int(rng.integers(1 << 31)), FAMILIES[i % 3]))
    return out


def seeded_trees(count, n_lo, n_hi, seed):
    rng = np.random.default_rng(seed)
    return [random_tree(int(rng.integers(n_lo, n_hi + 1)), int(rng.integers(1 << 31)))
            for _ in range(count)]


@pytest.fixture
def square():
    return square_path()


def pytest_terminal_summary(terminalreporter):
    try:
        import test_acceptance
    except ImportError:
        return
    if not test_acceptance.REPORT:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(test_acceptance.REPORT, key=lambda k: int(k[2:])):
        terminalreporter.write_line(test_acceptance.REPORT[key])
