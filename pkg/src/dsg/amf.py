"""Approximate median finding over a linked list.

A probabilistic skip list with bounded support is built over the list.
Values travel to the nearest promoted node on the left, level by level, and
from a threshold level upward every holder keeps only an evenly spaced
sample of what it has gathered. Each kept value carries a left rank (values
guaranteed larger) and a right rank (values guaranteed smaller); the root
picks its answer from these ranks.

Round counts model synchronous forwarding along list links. A holder moves on
as soon as its own segment has reported (the last supporter tags its
message), so there is no barrier between levels and a gather costs the
longest hop path from any member up to the root. Broadcasts retrace the same
tree. Per-value transfers are counted as messages.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Any, Hashable, Optional, Sequence


@dataclass
class BalancedSkipList:
    members: list
    a: int
    levels: list[list[int]]  # member positions present at each level
    small: bool = False
    construction_rounds: int = 0
    children: list[list[list[int]]] = field(default_factory=list)
    _depth: Optional[int] = field(default=None, repr=False)

    @property
    def height(self) -> int:
        return len(self.levels) - 1

    @property
    def n(self) -> int:
        return len(self.members)

    def supports(self, level: int) -> list[int]:
        """Lower-level steps between consecutive nodes at ``level``."""
        below = {p: i for i, p in enumerate(self.levels[level - 1])}
        here = self.levels[level]
        return [below[q] - below[p] for p, q in zip(here, here[1:])]

    def level_latency(self, level: int) -> int:
        return max((len(seg) - 1 for seg in self.children[level]), default=0)

    def latency(self) -> int:
        """Hops on the longest member-to-root path of the gather tree."""
        if self._depth is None:
            ready = {p: 0 for p in self.levels[0]}
            for level in range(1, len(self.levels)):
                ready = {seg[0]: max(ready[q] + k for k, q in enumerate(seg))
                         for seg in self.children[level]}
            self._depth = ready[0]
        return self._depth

    def barrier_latency(self) -> int:
        """Gather time if every level waited for the slowest segment."""
        return sum(self.level_latency(i) for i in range(1, len(self.levels)))


def support_bounds(a: int) -> tuple[int, int]:
    return max(2, math.ceil(a / 2)), 2 * a


def _segments(upper: list[int], lower: list[int]) -> list[list[int]]:
    segs: list[list[int]] = []
    j = 0
    for k, p in enumerate(upper):
        nxt = upper[k + 1] if k + 1 < len(upper) else None
        seg = []
        while j < len(lower) and (nxt is None or lower[j] < nxt):
            if lower[j] >= p:
                seg.append(lower[j])
            j += 1
        segs.append(seg)
    return segs


def build_balanced_skiplist(members: Sequence, a: int, seed: Optional[int] = None,
                            rng: Optional[random.Random] = None) -> BalancedSkipList:
    if not members:
        raise ValueError("empty member list")
    if a < 2:
        raise ValueError("a must be >= 2")
    rng = rng if rng is not None else random.Random(seed)
    members = list(members)
    n = len(members)
    probe = min(n, 2 * a + 1) - 1  # leftmost learns whether the list is small
    base = list(range(n))
    if n <= 2 * a:
        levels = [base, [0]] if n > 1 else [base]
        sl = BalancedSkipList(members, a, levels, small=True, construction_rounds=probe)
    else:
        lo, hi = support_bounds(a)
        levels = [base]
        rounds = probe
        while len(levels[-1]) > 1:
            cur = levels[-1]
            m = len(cur)
            chosen = [0]
            max_gap = 0
            for j in range(1, m):
                gap = j - chosen[-1]
                if gap >= hi or (gap >= lo and rng.random() < 1.0 / a):
                    chosen.append(j)
                    max_gap = max(max_gap, gap)
            max_gap = max(max_gap, m - chosen[-1] - 1)
            levels.append([cur[j] for j in chosen])
            rounds += max_gap + 1
        sl = BalancedSkipList(members, a, levels, small=False, construction_rounds=rounds)
    sl.children = [[]] + [_segments(sl.levels[i], sl.levels[i - 1])
                          for i in range(1, len(sl.levels))]
    return sl


@dataclass(frozen=True)
class RankedValue:
    value: Any
    left_rank: int
    right_rank: int
    origin: Hashable


@dataclass
class MedianResult:
    value: Any
    origin: Hashable
    left_rank: int
    right_rank: int
    rounds: int
    messages: int
    candidates: int = 0


class _Bag:
    """Values held by one node; ``exact`` means nothing was discarded yet,
    so ranks are implied by positions."""

    __slots__ = ("items", "exact", "ranked")

    def __init__(self, items, exact: bool, ranked: bool):
        self.items = items  # exact: list of keys; otherwise sorted (key, left, right)
        self.exact = exact
        self.ranked = ranked

    def ranked_items(self):
        if self.ranked:
            return self.items
        keys = sorted(self.items)
        m = len(keys)
        return [(k, m - 1 - i, i) for i, k in enumerate(keys)]

    def __len__(self):
        return len(self.items)


def merge_ranked(groups: list[list[tuple]]) -> list[tuple]:
    """Combine rank-annotated sorted groups into one.

    For a value s and another group C, the smallest member v of C above s is
    larger than s along with every value C already guarantees above v, so C
    contributes left(v) + 1; taking the max over larger members of C keeps
    the bound sound. Right ranks are symmetric.
    """
    tagged = sorted((item, g) for g, grp in enumerate(groups) for item in grp)
    k = len(groups)
    out_left = [0] * len(tagged)
    contrib = [0] * k
    total = 0
    for idx in range(len(tagged) - 1, -1, -1):
        (key, left, _), g = tagged[idx]
        out_left[idx] = max(left, contrib[g]) + total - contrib[g]
        if left + 1 > contrib[g]:
            total += left + 1 - contrib[g]
            contrib[g] = left + 1
    out_right = [0] * len(tagged)
    contrib = [0] * k
    total = 0
    for idx, ((key, _, right), g) in enumerate(tagged):
        out_right[idx] = max(right, contrib[g]) + total - contrib[g]
        if right + 1 > contrib[g]:
            total += right + 1 - contrib[g]
            contrib[g] = right + 1
    return [(item[0], out_left[i], out_right[i]) for i, (item, _) in enumerate(tagged)]


def sampling_threshold(a: int, h: int) -> Optional[int]:
    """First skip-list level at which holders sample; None if never."""
    if a <= 2:
        return None
    base = a / 2
    k = 0
    while base ** k < h - 1e-12:
        k += 1
    return k + 2


def stride_sample(items: list, k: int) -> list:
    m = len(items)
    if m <= k:
        return items
    if k <= 1:
        return [items[0]]
    picks = sorted({round(j * (m - 1) / (k - 1)) for j in range(k)})
    return [items[p] for p in picks]


def pick_median(items: list[tuple], n: int) -> tuple:
    target = math.ceil(n / 2)
    for it in items:
        _, left, right = it
        if left < target <= n - right:
            return it
    return min(items, key=lambda it: (abs((it[2] + 1 + n - it[1]) / 2 - target), it[0]))


def approx_median(sl: BalancedSkipList, values: Sequence) -> MedianResult:
    """Approximate median of ``values`` (aligned with ``sl.members``).

    Ties are ordered by member identity, so every value is distinct as a
    (value, origin) key.
    """
    if len(values) != sl.n:
        raise ValueError(f"expected {sl.n} values, got {len(values)}")
    n = sl.n
    keys = [(values[i], sl.members[i]) for i in range(n)]
    if n == 1:
        return MedianResult(values[0], sl.members[0], 0, 0, 0, 0, 1)
    h = sl.height
    threshold = None if sl.small else sampling_threshold(sl.a, h)
    keep = sl.a * h
    bags: dict[int, _Bag] = {i: _Bag([keys[i]], True, False) for i in range(n)}
    messages = 0
    for level in range(1, h + 1):
        new_bags: dict[int, _Bag] = {}
        for seg in sl.children[level]:
            holder = seg[0]
            parts = [bags[p] for p in seg]
            for dist, p in enumerate(seg):
                messages += dist * len(bags[p])
            if all(b.exact for b in parts):
                merged = _Bag([k for b in parts for k in b.items], True, False)
            else:
                merged = _Bag(merge_ranked([b.ranked_items() for b in parts]), False, True)
            sampling = threshold is not None and threshold <= level < h
            if sampling and len(merged) > keep:
                merged = _Bag(stride_sample(merged.ranked_items(), keep), False, True)
            new_bags[holder] = merged
        bags = new_bags
    root = bags[0]
    final = root.ranked_items()
    key, left, right = pick_median(final, n)
    # gather up, then broadcast the answer back down the same tree
    rounds = 2 * sl.latency()
    messages += n - 1
    return MedianResult(key[0], key[1], left, right, rounds, messages, len(final))


def exact_median_key(values: Sequence, origins: Sequence) -> tuple:
    keys = sorted(zip(values, origins))
    return keys[math.ceil(len(keys) / 2) - 1]


def distributed_sum(sl: BalancedSkipList, vectors: Sequence[Sequence[int]]) -> tuple[list[int], int, int]:
    """Componentwise sum gathered to the head and broadcast back.

    Returns (sums, rounds, messages).
    """
    if len(vectors) != sl.n:
        raise ValueError(f"expected {sl.n} vectors, got {len(vectors)}")
    width = len(vectors[0]) if vectors else 0
    if any(len(v) != width for v in vectors):
        raise ValueError("vectors differ in length")
    held = {i: list(vectors[i]) for i in range(sl.n)}
    messages = 0
    for level in range(1, len(sl.levels)):
        nxt = {}
        for seg in sl.children[level]:
            acc = [0] * width
            for dist, p in enumerate(seg):
                acc = [x + y for x, y in zip(acc, held[p])]
                messages += dist
            nxt[seg[0]] = acc
        held = nxt
    sums = held[0]
    rounds = 2 * sl.latency()
    messages += sl.n - 1
    return sums, rounds, messages


def broadcast(sl: BalancedSkipList, chunks: int = 1) -> tuple[int, int]:
    """Rounds and messages to deliver a ``chunks``-message payload from the
    head to every member, pipelined."""
    if sl.n <= 1:
        return 0, 0
    return sl.latency() + chunks - 1, (sl.n - 1) * chunks
