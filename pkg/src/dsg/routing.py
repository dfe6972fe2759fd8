"""Standard top-down greedy skip graph routing."""

from __future__ import annotations

from dataclasses import dataclass, field

from .topology import NodeKey, Topology


@dataclass
class RoutePath:
    hops: list[NodeKey]
    alpha: int
    level_moves: int = 0
    level_drops: int = 0
    levels: list[int] = field(default_factory=list)  # level of each edge

    @property
    def distance(self) -> int:
        """Intermediate nodes on the path."""
        return max(0, len(self.hops) - 2)

    @property
    def rounds(self) -> int:
        return len(self.hops) - 1


def route(topo: Topology, src: NodeKey, dst: NodeKey) -> RoutePath:
    for x in (src, dst):
        if x not in topo.nodes:
            raise KeyError(f"unknown node {x}")
    if topo.nodes[dst].is_dummy:
        raise ValueError(f"destination {dst} is a dummy")
    if src == dst:
        return RoutePath([src], alpha=topo.height - 1)

    rightward = dst > src
    cur = src
    hops = [src]
    edge_levels = []
    moves = drops = 0
    level = topo.singleton_level(src)
    while cur != dst:
        lst, i = topo.position(level, cur)
        j = i + 1 if rightward else i - 1
        if 0 <= j < len(lst):
            nxt = lst[j]
            if (nxt <= dst) if rightward else (nxt >= dst):
                cur = nxt
                hops.append(cur)
                edge_levels.append(level)
                moves += 1
                continue
        if level == 0:
            raise RuntimeError(f"routing from {src} fell off the base list before {dst}")
        level -= 1
        drops += 1
    alpha = topo.common_prefix(src, dst)
    return RoutePath(hops, alpha, moves, drops, edge_levels)
