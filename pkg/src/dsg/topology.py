"""Skip graph representation, construction and validation.

A topology is stored as a sorted base list plus one membership vector per
node. Every linked list at level ``i`` is the subsequence of the base list
whose members share the first ``i`` membership bits, so neighbor links are
derived rather than stored.
"""

from __future__ import annotations

import bisect
import json
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Optional, Union



class DummyId(Fraction):
    """Fractional dummy id, never integral. Caches its hash and a float
    image: float conversion is monotone, so unequal images decide an order
    comparison exactly and only ties fall back to rational arithmetic."""

    __slots__ = ("_hash", "_f")

    def __hash__(self) -> int:
        try:
            return self._hash
        except AttributeError:
            self._hash = Fraction.__hash__(self)
            return self._hash

    def _approx(self) -> float:
        try:
            return self._f
        except AttributeError:
            self._f = self._numerator / self._denominator
            return self._f

    def __eq__(self, other) -> bool:
        if type(other) is int:
            return False
        return Fraction.__eq__(self, other)

    def __lt__(self, other) -> bool:
        a = self._approx()
        b = other._approx() if type(other) is DummyId else float(other)
        return a < b if a != b else Fraction.__lt__(self, other)

    def __gt__(self, other) -> bool:
        a = self._approx()
        b = other._approx() if type(other) is DummyId else float(other)
        return a > b if a != b else Fraction.__gt__(self, other)

    def __le__(self, other) -> bool:
        return not self.__gt__(other)

    def __ge__(self, other) -> bool:
        return not self.__lt__(other)


NodeKey = Union[int, Fraction]


@dataclass
class NodeRecord:
    id: NodeKey
    bits: list[int]  # bits[i - 1] selects the sublist at level i
    timestamps: list[int]
    group_ids: list[NodeKey]
    dominating: list[bool]
    group_base: int = 0
    is_dummy: bool = False

    def bit(self, level: int) -> int:
        if level <= 0:
            raise ValueError("level 0 has no membership bit")
        return self.bits[level - 1] if level - 1 < len(self.bits) else 0

    def copy(self) -> "NodeRecord":
        return NodeRecord(self.id, list(self.bits), list(self.timestamps),
                          list(self.group_ids), list(self.dominating),
                          self.group_base, self.is_dummy)


@dataclass(frozen=True)
class Violation:
    kind: str
    level: int
    where: str

    def __str__(self) -> str:
        return f"{self.kind} at level {self.level}: {self.where}"


class TopologyError(Exception):
    pass


class Topology:
    """Skip graph over integer ids (dummies carry fractional ids).

    ``max_run`` is the longest run of equal next-level bits that dummy repair
    tolerates inside one list; validation always checks the a-balance
    property itself (no run longer than ``a``).
    """

    def __init__(self, a: int, max_run: Optional[int] = None):
        if a < 2:
            raise ValueError(f"balance parameter must be >= 2, got {a}")
        self.a = a
        self.max_run = a if max_run is None else max_run
        self.nodes: dict[NodeKey, NodeRecord] = {}
        self.order: list[NodeKey] = []
        self._cache: Optional[list[list[list[NodeKey]]]] = None
        self._where_cache: Optional[list[dict]] = None
        self._height = 1

    # -- basic accessors -------------------------------------------------

    def __contains__(self, x: NodeKey) -> bool:
        return x in self.nodes

    def __getitem__(self, x: NodeKey) -> NodeRecord:
        return self.nodes[x]

    def __len__(self) -> int:
        return len(self.nodes)

    @property
    def height(self) -> int:
        self._structure()
        return self._height

    @property
    def real_ids(self) -> list[NodeKey]:
        return [x for x in self.order if not self.nodes[x].is_dummy]

    @property
    def dummy_ids(self) -> list[NodeKey]:
        return [x for x in self.order if self.nodes[x].is_dummy]

    @property
    def n_real(self) -> int:
        return sum(1 for r in self.nodes.values() if not r.is_dummy)

    @property
    def dummy_count(self) -> int:
        return len(self.nodes) - self.n_real

    def touch(self) -> None:
        """Drop cached list structure after membership bits changed."""
        self._cache = None

    def copy(self) -> "Topology":
        t = Topology(self.a, self.max_run)
        t.nodes = {k: r.copy() for k, r in self.nodes.items()}
        t.order = list(self.order)
        return t

    # -- list structure --------------------------------------------------

    def _structure(self) -> list[list[list[NodeKey]]]:
        if self._cache is not None:
            return self._cache
        levels: list[list[list[NodeKey]]] = []
        current = [list(self.order)] if self.order else []
        depth_cap = max((len(r.bits) for r in self.nodes.values()), default=0)
        level = 0
        while current:
            levels.append(current)
            nxt = []
            for lst in current:
                if len(lst) < 2 or level >= depth_cap:
                    continue
                zero, one = _split(self.nodes, lst, level)
                nxt.extend(s for s in (zero, one) if s)
            current = nxt
            level += 1
        self._cache = levels
        self._where_cache = None
        self._height = max(1, len(levels))
        return levels

    @property
    def _where(self) -> list[dict]:
        """Per level, node -> (its list, index in it); built on demand."""
        levels = self._structure()
        if self._where_cache is None:
            self._where_cache = [{x: (lst, i) for lst in lists for i, x in enumerate(lst)}
                                 for lists in levels]
        return self._where_cache

    def lists_at(self, level: int) -> list[list[NodeKey]]:
        levels = self._structure()
        return levels[level] if level < len(levels) else []

    def iter_lists(self) -> Iterator[tuple[int, list[NodeKey]]]:
        for level, lists in enumerate(self._structure()):
            for lst in lists:
                yield level, lst

    def list_of(self, level: int, x: NodeKey) -> list[NodeKey]:
        levels = self._structure()
        if level < len(levels) and x in self._where[level]:
            return self._where[level][x][0]
        rec = self.nodes[x]
        prefix = rec.bits[:level]
        return [y for y in self.order
                if self.nodes[y].bits[:level] == prefix]

    def position(self, level: int, x: NodeKey) -> tuple[list[NodeKey], int]:
        """(list, index) of ``x`` at ``level``; the list must not be mutated."""
        self._structure()
        if level < len(self._where) and x in self._where[level]:
            return self._where[level][x]
        lst = self.list_of(level, x)
        return lst, lst.index(x)

    def singleton_level(self, x: NodeKey) -> int:
        self._structure()
        for level, where in enumerate(self._where):
            if len(where[x][0]) == 1:
                return level
        raise TopologyError(f"{x} never becomes singleton")

    def common_prefix(self, x: NodeKey, y: NodeKey) -> int:
        bx, by = self.nodes[x].bits, self.nodes[y].bits
        k = 0
        for p, q in zip(bx, by):
            if p != q:
                break
            k += 1
        return k

    def neighbors(self, level: int, x: NodeKey) -> tuple[Optional[NodeKey], Optional[NodeKey]]:
        lst, i = self.position(level, x)
        left = lst[i - 1] if i > 0 else None
        right = lst[i + 1] if i + 1 < len(lst) else None
        return left, right

    # -- normalisation ---------------------------------------------------

    def normalize(self) -> None:
        """Resize every per-level array to the current height.

        Bits above a node's singleton level carry no structure and are
        zeroed so equal topologies dump identically.
        """
        self.touch()
        levels = self._structure()
        height = self._height
        single = {}
        for level, lists in enumerate(levels):
            for lst in lists:
                if len(lst) == 1 and lst[0] not in single:
                    single[lst[0]] = level
        for x, rec in self.nodes.items():
            s = single.get(x, height - 1)
            bits = _resize(rec.bits, s, 0) + [0] * (height - 1 - s)
            rec.bits = bits[:height - 1]
            rec.timestamps = _resize(rec.timestamps, height, 0)
            rec.group_ids = _resize(rec.group_ids, height, 0 if rec.is_dummy else x)
            rec.dominating = _resize(rec.dominating, height, False)
            rec.group_base = min(rec.group_base, height - 1)
        self.touch()

    # -- mutation helpers used by join/leave and dummy repair -------------

    def insert_record(self, rec: NodeRecord) -> None:
        if rec.id in self.nodes:
            raise TopologyError(f"duplicate id {rec.id}")
        self.nodes[rec.id] = rec
        _insort(self.order, rec.id)
        self.touch()

    def delete(self, x: NodeKey) -> None:
        """Unlink ``x`` from every level and collapse lists left unsplit."""
        del self.nodes[x]
        self.order.remove(x)
        self.touch()
        self._collapse()
        self.normalize()

    def _collapse(self) -> None:
        # A list whose members all took the same next bit no longer splits;
        # the redundant level is removed for those members.
        changed = True
        while changed:
            changed = False
            for level, lst in self.iter_lists():
                if len(lst) < 2:
                    continue
                depth = level + 1
                if any(len(self.nodes[x].bits) < depth for x in lst):
                    continue
                if len({self.nodes[x].bit(depth) for x in lst}) == 1:
                    for x in lst:
                        rec = self.nodes[x]
                        del rec.bits[depth - 1]
                        for arr in (rec.timestamps, rec.group_ids, rec.dominating):
                            if depth < len(arr):
                                del arr[depth]
                        if rec.group_base > level:
                            rec.group_base -= 1
                    self.touch()
                    changed = True
                    break

    def place(self, x: NodeKey, from_level: int, rng: random.Random,
              avoid: frozenset = frozenset()) -> None:
        """Choose bits of ``x`` above ``from_level`` until it is singleton.

        Each bit avoids extending a run beyond ``max_run`` where possible,
        then avoids sublists holding any node in ``avoid``, and otherwise
        joins the smaller sublist.
        """
        rec = self.nodes[x]
        level = from_level
        del rec.bits[level:]
        prefix = _prefix(rec.bits, level)
        nodes = self.nodes
        lst = [y for y in self.order if _prefix(nodes[y].bits, level) == prefix]
        while len(lst) > 1:
            others = [y for y in lst if y != x]
            nxt = [nodes[y].bit(level + 1) for y in lst]
            if len(others) == 1:
                b = 1 - nodes[others[0]].bit(level + 1)
            else:
                i = lst.index(x)
                scores = []
                for b in (0, 1):
                    run = 1
                    j = i - 1
                    while j >= 0 and nxt[j] == b:
                        run, j = run + 1, j - 1
                    j = i + 1
                    while j < len(lst) and nxt[j] == b:
                        run, j = run + 1, j + 1
                    side = [y for y, c in zip(lst, nxt) if c == b and y != x]
                    crowded = any(y in avoid for y in side)
                    scores.append((run > self.max_run, crowded, len(side), rng.random(), b))
                b = min(scores)[-1]
            rec.bits.append(b)
            level += 1
            lst = [y for y in lst if nodes[y].bit(level) == b]
        self.touch()

    def long_runs(self, max_run: Optional[int] = None) -> list[tuple[int, list[NodeKey], int]]:
        """Every maximal run of more than ``max_run`` equal next-level bits,
        as (level, run members, bit)."""
        limit = self.max_run if max_run is None else max_run
        out = []
        for level, lst in self.iter_lists():
            if len(lst) <= limit:
                continue
            out.extend((level, run, b) for run, b in self._runs(lst, level, limit))
        return out

    def repair(self, rng: random.Random, max_run: Optional[int] = None,
               cap: int = 64, avoid: frozenset = frozenset(),
               tidy: bool = True) -> list[NodeKey]:
        """Insert dummies until no list holds a run longer than ``max_run``.

        Passes walk the levels bottom-up, visiting only lists that hold a
        long run or a new dummy. A dummy gets only the bit that breaks its
        run; its higher bits are chosen when its list is reached, so they
        can break further runs instead of starting new ones. A dummy also
        joins every lower list on its path and can lengthen a run there,
        which the next pass picks up. Dummies stay out of sublists holding
        ``avoid`` nodes where possible.
        """
        limit = self.max_run if max_run is None else max_run
        lists = [{tuple(_prefix(self.nodes[lst[0]].bits, level)): list(lst) for lst in level_lists}
                 for level, level_lists in enumerate(self._structure())]
        work = {(level, p) for level, by_prefix in enumerate(lists)
                for p, lst in by_prefix.items()
                if len(lst) > limit and self._runs(lst, level, limit)}
        added: list[NodeKey] = []
        free: set = set()  # new dummies whose bits stop at their list level
        for _ in range(cap):
            if not work:
                break
            suspects = self._pass(lists, work, limit, rng, avoid, free, added)
            if len(self.order) > self.growth_limit * self.n_real + 64:
                # packed lower lists (small a) can make every dummy demand more
                raise TopologyError(f"dummy repair diverged at {len(self.order)} nodes")
            work = {(level, p) for level, p in suspects
                    if self._runs(lists[level][p], level, limit)}
        else:
            raise TopologyError("dummy repair did not converge")
        if added:
            self.touch()
            if tidy:
                self.normalize()
        return added

    growth_limit = 32

    def _pass(self, lists: list, work: set, limit: int, rng: random.Random,
              avoid: frozenset, free: set, added: list) -> set:
        """One bottom-up pass over the lists in ``work`` and everything they
        change above; returns lower lists that new dummies passed through."""
        nodes = self.nodes
        pending: dict = {}
        for level, p in work:
            pending.setdefault(level, set()).add(p)
        suspects: set = set()
        level = min(pending)
        while pending:
            todo = pending.pop(level, set())
            while len(lists) <= level + 1:
                lists.append({})
            for p in sorted(todo):
                lst = lists[level][p]
                if len(lst) < 2:
                    continue
                self._choose_free_bits(lst, level, free, avoid, rng)
                for run, b in self._runs(lst, level, limit):
                    added.extend(self._break_run(lists, lst, level, run, b, limit,
                                                 free, suspects))
                zero, one = _split(nodes, lst, level)
                if not zero or not one:
                    # every member took the same side, so a dummy splits it
                    only = zero or one
                    b = _bit(nodes[only[0]].bits, level)
                    added.extend(self._break_run(lists, lst, level, only, b, len(only) - 1,
                                                 free, suspects))
                    zero, one = _split(nodes, lst, level)
                for side, bit in ((zero, 0), (one, 1)):
                    q = p + (bit,)
                    old = lists[level + 1].get(q)
                    if side and (old is None or len(old) != len(side)):
                        lists[level + 1][q] = side
                        pending.setdefault(level + 1, set()).add(q)
            level += 1
        return suspects

    def _choose_free_bits(self, lst: list, level: int, free: set,
                          avoid: frozenset, rng: random.Random) -> None:
        """Pick the next bit of every free dummy in ``lst``, left to right,
        keeping runs short and the two sides even."""
        nodes = self.nodes
        todo = []
        nb = []
        for i, x in enumerate(lst):
            bits = nodes[x].bits
            if len(bits) == level and x in free:
                todo.append(i)
                nb.append(None)
            else:
                nb.append(bits[level] if level < len(bits) else 0)
        if not todo:
            return
        blocked = {nb[i] for i, x in enumerate(lst) if x in avoid}
        counts = [nb.count(0), nb.count(1)]
        for i in todo:
            options = []
            for b in (0, 1):
                run = 1
                j = i - 1
                while j >= 0 and nb[j] == b:
                    run, j = run + 1, j - 1
                j = i + 1
                while j < len(nb) and nb[j] == b:
                    run, j = run + 1, j + 1
                crowded = len(blocked) == 1 and b in blocked
                prev = nb[i - 1] if i > 0 else None
                options.append((crowded, run, counts[b], b == prev, rng.random(), b))
            b = min(options)[-1]
            nb[i] = b
            counts[b] += 1
            nodes[lst[i]].bits.append(b)

    def _runs(self, lst: list, level: int, limit: int) -> list[tuple[list, int]]:
        nodes = self.nodes
        out = []
        run: list = []
        prev = None
        for x in lst:
            bits = nodes[x].bits
            b = bits[level] if level < len(bits) else 0
            if b == prev:
                run.append(x)
                continue
            if len(run) > limit:
                out.append((run, prev))
            run, prev = [x], b
        if len(run) > limit:
            out.append((run, prev))
        return out

    def _break_run(self, lists: list, lst: list, level: int, run: list, b: int,
                   limit: int, free: set, suspects: set) -> list[NodeKey]:
        """Cut ``run`` into pieces of at most ``limit`` with the fewest
        dummies; each cut goes to the base gap that keeps lower lists
        shortest."""
        nodes = self.nodes
        prefix = _prefix(nodes[run[0]].bits, level)
        bits = prefix + [1 - b]
        lower = [lists[j][tuple(prefix[:j])] for j in range(level)]
        out = []
        rest = run
        while len(rest) > limit:
            L = len(rest)
            lo = max(1, L - limit * (math.ceil(L / limit) - 1))
            hi = min(limit, L - 1)
            best = None
            for k in range(lo, hi + 1):
                a_key, b_key = rest[k - 1], rest[k]
                i0 = bisect.bisect_right(self.order, a_key)
                i1 = bisect.bisect_right(self.order, b_key)
                for gi in range(i0, i1):
                    excess, longest = self._excess_below(lower, bits, self.order[gi - 1], limit)
                    score = (excess, longest, abs(2 * k - L), gi)
                    if best is None or score < best[0]:
                        best = (score, k, gi)
                    if excess == 0:
                        break
            _, k, gi = best
            key = _between(self.order[gi - 1], self.order[gi])
            rec = NodeRecord(key, list(bits), [], [], [], 0, True)
            nodes[key] = rec
            self.order.insert(gi, key)
            for j, lower_list in enumerate(lower):
                bisect.insort(lower_list, key)
                suspects.add((j, tuple(prefix[:j])))
            bisect.insort(lst, key)
            free.add(key)
            out.append(key)
            rest = rest[k:]
        return out

    def _excess_below(self, lower: list, bits: list, left, limit: int) -> tuple[int, int]:
        """(total excess, longest run) over the lists below if a node with
        membership ``bits`` sat right after base key ``left``."""
        excess = longest = 0
        nodes = self.nodes
        for j, lst in enumerate(lower):
            idx = bisect.bisect_right(lst, left)
            b = bits[j]
            run = 1
            k = idx - 1
            while k >= 0 and run <= limit and _bit(nodes[lst[k]].bits, j) == b:
                run, k = run + 1, k - 1
            k = idx
            while k < len(lst) and run <= limit and _bit(nodes[lst[k]].bits, j) == b:
                run, k = run + 1, k + 1
            excess += max(0, run - limit)
            longest = max(longest, run)
        return excess, longest


def _bit(bits: list[int], index: int) -> int:
    return bits[index] if index < len(bits) else 0


def _split(nodes: dict, lst: list, level: int) -> tuple[list, list]:
    """Members of ``lst`` by their bit for level ``level + 1``."""
    zero, one = [], []
    for x in lst:
        bits = nodes[x].bits
        (one if level < len(bits) and bits[level] else zero).append(x)
    return zero, one


def _prefix(bits: list[int], level: int) -> list[int]:
    """First ``level`` bits, with missing trailing bits read as 0."""
    head = bits[:level]
    return head + [0] * (level - len(head))


def _between(lo: NodeKey, hi: NodeKey) -> DummyId:
    """A non-integral key strictly between two base neighbours."""
    mid = Fraction(lo) + (Fraction(hi) - Fraction(lo)) / 2
    if mid.denominator == 1:
        mid = Fraction(lo) + Fraction(1, 2)
    return DummyId(mid)


def _resize(arr: list, n: int, fill) -> list:
    return list(arr[:n]) + [fill] * (n - len(arr))


def _insort(order: list, key) -> None:
    lo, hi = 0, len(order)
    while lo < hi:
        mid = (lo + hi) // 2
        if order[mid] < key:
            lo = mid + 1
        else:
            hi = mid
    order.insert(lo, key)


def fresh_record(x: NodeKey, height: int) -> NodeRecord:
    return NodeRecord(id=x, bits=[], timestamps=[0] * height,
                      group_ids=[x] * height, dominating=[False] * height,
                      group_base=0)


def balanced_bits(size: int, a: int, rng: random.Random) -> list[int]:
    """Random 0/1 sequence with ceil(size/2) zeros, floor(size/2) ones and no
    run longer than ``a``."""
    zeros, ones = (size + 1) // 2, size // 2
    out: list[int] = []
    last, run = None, 0
    for _ in range(size):
        options = []
        for b, left in ((0, zeros), (1, ones)):
            if left == 0:
                continue
            r = run + 1 if b == last else 1
            if r > a:
                continue
            z, o = zeros - (b == 0), ones - (b == 1)
            same, other = (z, o) if b == 0 else (o, z)
            # remaining counts must still be arrangeable after this run
            if same > (a - r) + a * other or other > a * (same + 1):
                continue
            options.append((b, left))
        total = sum(w for _, w in options)
        pick = rng.random() * total
        for b, w in options:
            pick -= w
            if pick < 0:
                break
        run = run + 1 if b == last else 1
        last = b
        out.append(b)
        if b == 0:
            zeros -= 1
        else:
            ones -= 1
    return out


def build_initial(ids: Iterable[int], a: int, seed: int = 0,
                  max_run: Optional[int] = None) -> Topology:
    """Skip graph built by recursive balanced bisection."""
    ids = list(ids)
    if not ids:
        raise ValueError("need at least one node")
    if len(set(ids)) != len(ids):
        raise ValueError("duplicate ids")
    if any(not isinstance(x, int) or x < 1 for x in ids):
        raise ValueError("node ids must be positive integers")
    rng = random.Random(seed)
    topo = Topology(a, max_run)
    for x in ids:
        topo.nodes[x] = fresh_record(x, 1)
    topo.order = sorted(ids)

    def split(members: list[int]) -> None:
        if len(members) < 2:
            return
        halves: tuple[list[int], list[int]] = ([], [])
        for x, b in zip(members, balanced_bits(len(members), a, rng)):
            topo.nodes[x].bits.append(b)
            halves[b].append(x)
        split(halves[0])
        split(halves[1])

    split(topo.order)
    topo.normalize()
    for x in topo.order:
        topo.nodes[x].group_base = topo.singleton_level(x)
    return topo


def validate(topo: Topology) -> list[Violation]:
    out: list[Violation] = []
    order = topo.order
    if set(order) != set(topo.nodes) or len(order) != len(topo.nodes):
        out.append(Violation("base order", 0, "base list and node set differ"))
    for i in range(1, len(order)):
        if not order[i - 1] < order[i]:
            out.append(Violation("base order", 0, f"{order[i - 1]} before {order[i]}"))
    levels = topo._structure()
    height = len(levels)
    for level, lists in enumerate(levels):
        for lst in lists:
            if len(lst) < 2:
                continue
            depth = level + 1
            if level == height - 1 or any(len(topo.nodes[x].bits) < depth for x in lst):
                out.append(Violation("unterminated list", level, f"list starting {lst[0]}"))
                continue
            bits = [topo.nodes[x].bit(depth) for x in lst]
            if len(set(bits)) == 1:
                out.append(Violation("no split", level, f"list starting {lst[0]}"))
            run, prev = 0, None
            for x, b in zip(lst, bits):
                run = run + 1 if b == prev else 1
                prev = b
                if run == topo.a + 1:
                    out.append(Violation("a-balance", level,
                                         f"{topo.a + 1} consecutive ending at {x} share bit {b}"))
    n = topo.n_real
    if topo.dummy_count > math.ceil(n / topo.a):
        out.append(Violation("dummy count", 0, f"{topo.dummy_count} > ceil({n}/{topo.a})"))
    for x, rec in topo.nodes.items():
        if len(rec.bits) != height - 1 or any(
                len(arr) != height for arr in (rec.timestamps, rec.group_ids, rec.dominating)):
            out.append(Violation("record shape", 0, f"node {x}"))
        if not 0 <= rec.group_base <= height:
            out.append(Violation("group base", rec.group_base, f"node {x}"))
    return out


def highest_common_level(topo: Topology, u: NodeKey, v: NodeKey) -> tuple[int, list[NodeKey]]:
    for x in (u, v):
        if x not in topo.nodes:
            raise KeyError(f"unknown node {x}")
        if topo.nodes[x].is_dummy:
            raise ValueError(f"{x} is a dummy")
    if u == v:
        raise ValueError("u and v must differ")
    alpha = topo.common_prefix(u, v)
    return alpha, topo.list_of(alpha, u)


# -- canonical dump ---------------------------------------------------------

def _key_out(x):
    if isinstance(x, Fraction) and x.denominator != 1:
        return f"{x.numerator}/{x.denominator}"
    return int(x)


def _key_in(x):
    if isinstance(x, str):
        return DummyId(x)
    return x


def export_topology(topo: Topology) -> str:
    topo.normalize()
    nodes = []
    for x in topo.order:
        r = topo.nodes[x]
        nodes.append({
            "id": _key_out(x),
            "is_dummy": r.is_dummy,
            "membership": "".join(str(b) for b in r.bits),
            "timestamps": list(r.timestamps),
            "group_ids": [_key_out(g) for g in r.group_ids],
            "dominating": list(r.dominating),
            "group_base": r.group_base,
        })
    doc = {"height": topo.height, "balance": topo.a, "max_run": topo.max_run,
           "nodes": nodes}
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))


def import_topology(text: str) -> Topology:
    doc = json.loads(text)
    topo = Topology(doc["balance"], doc.get("max_run"))
    for nd in doc["nodes"]:
        x = _key_in(nd["id"])
        topo.nodes[x] = NodeRecord(
            id=x,
            bits=[int(c) for c in nd["membership"]],
            timestamps=list(nd["timestamps"]),
            group_ids=[_key_in(g) for g in nd["group_ids"]],
            dominating=list(nd["dominating"]),
            group_base=nd["group_base"],
            is_dummy=nd["is_dummy"],
        )
        topo.order.append(x)
    topo.touch()
    return topo
