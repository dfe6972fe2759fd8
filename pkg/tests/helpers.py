"""Hand-built topologies and small independent oracles shared by tests."""

from __future__ import annotations

from dsg.topology import NodeRecord, Topology


def counting_bits(index: int, width: int) -> list[int]:
    # low bit first: every sublist alternates, so runs never exceed 1
    return [(index >> j) & 1 for j in range(width)]


def from_first_bits(first: list[int], a: int, max_run=None) -> Topology:
    """Nodes 1..n with the given level-1 bits; higher levels split each
    level-1 list by counting, which never creates a run."""
    topo = Topology(a, max_run)
    sides = {0: [], 1: []}
    for i, b in enumerate(first):
        sides[b].append(i)
    for i, b in enumerate(first):
        x = i + 1
        rank = sides[b].index(i)
        topo.nodes[x] = NodeRecord(x, [b] + counting_bits(rank, 6), [], [], [], 0)
        topo.order.append(x)
    topo.normalize()
    for x in topo.order:
        topo.nodes[x].group_base = topo.singleton_level(x)
    return topo


def prefix_alpha(topo: Topology, u, v) -> int:
    """Longest common prefix of the two membership vectors, read only up to
    the level where either node is alone."""
    bu, bv = topo.nodes[u].bits, topo.nodes[v].bits
    k = 0
    while k < len(bu) and k < len(bv) and bu[k] == bv[k]:
        k += 1
    return k


def greedy_route(topo: Topology, src, dst) -> list:
    """Independent greedy routing over membership vectors: at each level scan
    the base order for the next member sharing the current prefix."""
    if src == dst:
        return [src]
    nodes = topo.nodes
    order = topo.order
    step = 1 if dst > src else -1
    path = [src]
    cur = src
    level = len(nodes[src].bits)
    # drop to the highest level where src has a neighbor at all
    while level > 0:
        pre = nodes[src].bits[:level]
        if sum(1 for y in order if nodes[y].bits[:level] == pre) > 1:
            break
        level -= 1
    while cur != dst:
        pre = nodes[cur].bits[:level]
        members = [y for y in order if nodes[y].bits[:level] == pre]
        i = members.index(cur)
        j = i + step
        if 0 <= j < len(members) and ((members[j] <= dst) if step > 0 else (members[j] >= dst)):
            cur = members[j]
            path.append(cur)
        else:
            level -= 1
            if level < 0:
                raise AssertionError("fell off the base list")
    return path


def direct_sum(vectors):
    width = len(vectors[0]) if vectors else 0
    return [sum(v[i] for v in vectors) for i in range(width)]
