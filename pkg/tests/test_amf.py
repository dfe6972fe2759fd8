import math
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dsg.amf import (approx_median, broadcast, build_balanced_skiplist, distributed_sum,
                     exact_median_key, support_bounds)
from dsg.oracle import exact_median, oracle_rank

from helpers import direct_sum


def test_small_list_flagged():
    sl = build_balanced_skiplist(list("abc"), 3, seed=0)
    assert sl.small
    assert sl.height == 1


@pytest.mark.parametrize("seed", range(10))
def test_supports_within_bounds(seed):
    sl = build_balanced_skiplist(list(range(256)), 4, seed=seed)
    lo, hi = support_bounds(4)
    assert (lo, hi) == (2, 8)
    for level in range(1, len(sl.levels)):
        sup = sl.supports(level)
        assert all(lo <= s <= hi for s in sup), (level, sup)


@pytest.mark.parametrize("seed", range(10))
def test_height_range(seed):
    sl = build_balanced_skiplist(list(range(256)), 4, seed=seed)
    assert math.log(256, 8) <= sl.height <= math.log2(256) + 1


def test_equal_values():
    sl = build_balanced_skiplist(list(range(40)), 3, seed=1)
    assert approx_median(sl, [7] * 40).value == 7


def test_five_values_exact():
    sl = build_balanced_skiplist(list(range(5)), 3, seed=0)
    res = approx_median(sl, [4, 1, 5, 3, 2])
    assert res.value == 3


def test_exact_median_oracle():
    assert exact_median([5]) == (5, 1)
    assert exact_median([1, 2, 3, 4]) == (2, 2)
    rng = random.Random(4)
    vals = [rng.random() for _ in range(10_000)]
    assert exact_median(vals)[0] == sorted(vals)[4999]
    assert exact_median_key(vals, range(len(vals)))[0] == exact_median(vals)[0]


@given(st.integers(min_value=9, max_value=600), st.integers(min_value=2, max_value=6),
       st.integers(min_value=0, max_value=2**32), st.integers(min_value=1, max_value=50))
def test_rank_guarantee(n, a, seed, spread):
    rng = random.Random(seed)
    vals = [rng.randrange(spread * n) for _ in range(n)]
    sl = build_balanced_skiplist(list(range(n)), a, seed=seed)
    res = approx_median(sl, vals)
    rank = oracle_rank(vals, list(range(n)), res.value, res.origin)
    # +1: the exact median of an even count already sits at n/2 + 1
    assert abs(rank - n / 2) <= n / (2 * a) + 1


def test_sum_all_zero():
    sl = build_balanced_skiplist(list(range(30)), 3, seed=0)
    sums, _, _ = distributed_sum(sl, [[0, 0, 0]] * 30)
    assert sums == [0, 0, 0]


def test_sum_singleton():
    sl = build_balanced_skiplist(["x"], 3, seed=0)
    assert distributed_sum(sl, [[4, -2]])[0] == [4, -2]


def test_sum_matches_direct():
    rng = random.Random(8)
    vecs = [[rng.randint(-10**6, 10**6) for _ in range(4)] for _ in range(200)]
    sl = build_balanced_skiplist(list(range(200)), 4, seed=3)
    assert distributed_sum(sl, vecs)[0] == direct_sum(vecs)


def test_broadcast_singleton():
    assert broadcast(build_balanced_skiplist(["x"], 3, seed=0))[0] == 0


@pytest.mark.parametrize("a", [2, 3, 4])
def test_broadcast_reaches_everyone_in_bound(a):
    sl = build_balanced_skiplist(list(range(64)), a, seed=2)
    rounds, messages = broadcast(sl)
    assert messages == 63
    assert rounds <= 2 * a * (sl.height + 1)


def test_broadcast_chunks_additive():
    sl = build_balanced_skiplist(list(range(64)), 3, seed=2)
    H = 7
    assert broadcast(sl, H)[0] - broadcast(sl, 1)[0] == H - 1
