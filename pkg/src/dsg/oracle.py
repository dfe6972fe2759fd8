"""Ground truth computed by brute force: communication graph, working set
numbers and bound, exact medians, and the timestamp connectivity check."""

from __future__ import annotations

import math
import random
from collections import defaultdict, deque
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Optional, Sequence

from .topology import NodeKey, Topology


@dataclass
class CommunicationGraph:
    nodes: set = field(default_factory=set)
    history: dict = field(default_factory=lambda: defaultdict(list))

    @staticmethod
    def _pair(u, v) -> frozenset:
        return frozenset((u, v))

    def record(self, u, v, time: int) -> None:
        if u == v:
            raise ValueError("self communication")
        times = self.history[self._pair(u, v)]
        if times and time <= times[-1]:
            raise ValueError(f"time {time} not after {times[-1]} for pair {u},{v}")
        times.append(time)
        self.nodes.update((u, v))

    def last(self, u, v) -> Optional[int]:
        times = self.history.get(self._pair(u, v))
        return times[-1] if times else None

    def window_adjacency(self, start: int, end: Optional[int] = None) -> dict:
        adj = defaultdict(set)
        for pair, times in self.history.items():
            if any(start <= s and (end is None or s <= end) for s in times):
                u, v = tuple(pair)
                adj[u].add(v)
                adj[v].add(u)
        return adj


def reachable(adj: dict, sources: Iterable) -> set:
    seen = set(sources)
    queue = deque(seen)
    while queue:
        x = queue.popleft()
        for y in adj.get(x, ()):
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def working_set_number(g: CommunicationGraph, u, v, now: int, n: int) -> int:
    """Nodes reachable from u or v using edges since u and v last talked.

    Call before recording the request at ``now``; ``n`` is the number of
    live nodes, returned on first contact.
    """
    last = g.last(u, v)
    if last is None:
        return n
    adj = g.window_adjacency(last, now)
    return len(reachable(adj, (u, v)))


def ws_bound(ws_numbers: Iterable[int]) -> float:
    return sum(math.log2(T) for T in ws_numbers)


def exact_median(values: Sequence, origins: Optional[Sequence[Hashable]] = None) -> tuple:
    """(value, rank) of the element at sorted position ceil(n/2)."""
    if not values:
        raise ValueError("empty input")
    if origins is None:
        origins = range(len(values))
    keys = sorted(zip(values, origins))
    rank = math.ceil(len(keys) / 2)
    return keys[rank - 1][0], rank


def oracle_rank(values: Sequence, origins: Sequence, value, origin) -> int:
    """1-based position of (value, origin) in the sorted multiset."""
    key = (value, origin)
    return 1 + sum(1 for k in zip(values, origins) if k < key)


@dataclass(frozen=True)
class GroupViolation:
    level: int
    member: NodeKey
    group_id: NodeKey
    components: int

    def __str__(self) -> str:
        return (f"group {self.group_id} at level {self.level}: newer members than "
                f"{self.member} span {self.components} components")


def group_members(topo: Topology, level: int, x: NodeKey) -> list[NodeKey]:
    """Real nodes sharing x's list and group id at ``level``."""
    lst, _ = topo.position(level, x)
    gid = topo.nodes[x].group_ids[level]
    return [y for y in lst if not topo.nodes[y].is_dummy
            and topo.nodes[y].group_ids[level] == gid]


def group_connectivity_check(topo: Topology, g: CommunicationGraph,
                 samples: Iterable[tuple[int, NodeKey]]) -> list[GroupViolation]:
    """For each (level, x): members y of x's group with a later timestamp
    than x must be connected using communications at or after T^x."""
    out = []
    cache: dict[int, dict] = {}
    for level, x in samples:
        tx = topo.nodes[x].timestamps[level]
        newer = [y for y in group_members(topo, level, x)
                 if topo.nodes[y].timestamps[level] > tx]
        if len(newer) < 2:
            continue
        if tx not in cache:
            cache[tx] = g.window_adjacency(tx)
        adj = cache[tx]
        remaining = set(newer)
        comps = 0
        while remaining:
            comps += 1
            seed = remaining.pop()
            remaining -= reachable(adj, [seed])
        if comps > 1:
            out.append(GroupViolation(level, x, topo.nodes[x].group_ids[level], comps))
    return out


def sample_groups(topo: Topology, k: int, rng: random.Random) -> list[tuple[int, NodeKey]]:
    """Up to k (level, member) pairs drawn from groups of two or more nodes."""
    pool = []
    for level, lst in topo.iter_lists():
        if len(lst) < 2:
            continue
        by_gid = defaultdict(list)
        for y in lst:
            if not topo.nodes[y].is_dummy:
                by_gid[topo.nodes[y].group_ids[level]].append(y)
        for members in by_gid.values():
            if len(members) >= 2:
                pool.extend((level, y) for y in members)
    if len(pool) <= k:
        return pool
    return rng.sample(pool, k)
