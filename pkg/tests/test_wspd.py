import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from diamaug import build_split_tree, compute_wspd, validate_wspd, wspd
from diamaug.wspd import well_separated

# measured worst case of len(pairs) / (s * n) on random sets is about 1.23
PAIR_CONSTANT = 1.5


def test_split_two_points():
    t = build_split_tree([0.0, 1.0])
    assert len(t) == 3
    assert (t.lo[t.left[0]], t.hi[t.left[0]]) == (0, 1)
    assert (t.lo[t.right[0]], t.hi[t.right[0]]) == (1, 2)


def test_split_four_points_at_midpoint():
    t = build_split_tree([0.0, 1.0, 2.0, 3.0])
    assert (t.lo[t.left[0]], t.hi[t.left[0]]) == (0, 2)
    assert (t.lo[t.right[0]], t.hi[t.right[0]]) == (2, 4)


def test_split_single_point_and_duplicates():
    assert len(build_split_tree([4.0])) == 1
    t = build_split_tree([1.0, 1.0, 1.0])
    leaves = [i for i in range(len(t)) if t.is_leaf(i)]
    assert len(leaves) == 3


def test_split_rejects_unsorted():
    with pytest.raises(ValueError):
        build_split_tree([1.0, 0.0])


def test_wspd_two_points():
    pairs = wspd([0.0, 1.0], 2)
    assert len(pairs) == 1
    assert {pairs[0].a, pairs[0].b} == {(0, 1), (1, 2)}


def test_wspd_four_points_covers_each_pair_once():
    x = [0.0, 1.0, 2.0, 3.0]
    pairs = wspd(x, 1)
    seen = []
    for p in pairs:
        A, B = p.members()
        seen += [frozenset((a, b)) for a in A for b in B]
    assert sorted(map(sorted, seen)) == sorted(map(sorted, map(frozenset, itertools.combinations(range(4), 2))))
    assert validate_wspd(x, pairs, 1)


def test_wspd_single_point_empty():
    assert wspd([3.0], 5) == []


def test_validate_detects_missing_pair():
    x = np.sort(np.random.default_rng(1).random(30))
    pairs = wspd(x, 4)
    assert validate_wspd(x, pairs, 4)
    assert not validate_wspd(x, pairs[1:], 4)


def test_validate_detects_weak_separation():
    # two tight clusters: separation holds for s but not for a much larger s
    x = np.array([0.0, 0.1, 0.2, 10.0, 10.1, 10.2])
    pairs = wspd(x, 2)
    assert validate_wspd(x, pairs, 2)
    assert not validate_wspd(x, pairs, 200)


def test_bad_separation_rejected():
    with pytest.raises(ValueError):
        wspd([0.0, 1.0], 0)


def _same_pair_bounds_ok(x, pairs, s):
    for p in pairs:
        A, B = (x[lo:hi] for lo, hi in (p.a, p.b))
        xy = np.abs(A[:, None] - B[None, :])           # |xy| for x in A, y in B
        pq_min = xy.min()
        if xy.max() > (1 + 4 / s) * pq_min + 1e-12:
            return False
        for side in (A, B):
            if np.ptp(side) > (2 / s) * pq_min + 1e-12:
                return False
    return True


@pytest.mark.parametrize("s", [2, 8, 32, 320])
def test_same_pair_bounds_exhaustive(s):
    rng = np.random.default_rng(s)
    for _ in range(10):
        x = np.sort(rng.random(int(rng.integers(2, 51))))
        assert _same_pair_bounds_ok(x, wspd(x, s), s)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.floats(-1e3, 1e3), min_size=1, max_size=60), st.sampled_from([1, 2, 8, 32, 320]))
def test_random_sets_valid(xs, s):
    x = np.sort(np.array(xs))
    pairs = wspd(x, s)
    assert validate_wspd(x, pairs, s)
    assert all(well_separated(x, p.a, p.b, s) for p in pairs)
    assert all(p.rep_a == p.a[0] and p.rep_b == p.b[0] for p in pairs)


def test_pair_count_linear_in_s_n():
    rng = np.random.default_rng(99)
    for s in (2, 8, 32):
        x = np.sort(rng.random(800))
        assert len(compute_wspd(build_split_tree(x), s)) <= PAIR_CONSTANT * s * x.size
