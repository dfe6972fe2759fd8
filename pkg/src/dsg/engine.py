"""The skip graph transformation run after every request (u, v).

Only the nodes of l_alpha, the highest list holding both endpoints, take
part. They compute priorities, merge the two communicating groups, and then
recursively split every multi-node list by an approximate median until all
are singletons, so u and v end up sharing a list of two. Group ids, group
bases and timestamps are then rewritten, dummies restore the balance
property, and the result is validated.

The input topology is never mutated; its state serves as the pre-request
snapshot for every rule that reads old values.
"""

from __future__ import annotations

import math
import random
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Optional

from . import amf
from .priority import INF, PriorityValue
from .topology import (NodeKey, Topology, TopologyError, fresh_record,
                       highest_common_level, validate)


class TransformError(Exception):
    def __init__(self, message: str, violations=None):
        super().__init__(message)
        self.violations = violations or []


@dataclass
class TransformContext:
    t: int
    u: NodeKey
    v: NodeKey
    alpha: int
    d: int = 0
    current_list: list = field(default_factory=list)
    M: Optional[PriorityValue] = None
    M_origin: Optional[NodeKey] = None
    g_s: Optional[int] = None
    size: int = 0
    gs_size: int = 0
    L_low: int = 0
    L_high: int = 0
    pinned_medians: dict = field(default_factory=dict)


@dataclass
class ListSplit:
    level: int  # level of the list; its members get bit level + 1
    members: list
    median: Optional[PriorityValue]
    case: str
    zero: list
    one: list
    rounds: int
    contains_uv: bool
    g_s: Optional[int] = None


@dataclass
class TransformReport:
    u: NodeKey
    v: NodeKey
    t: int
    alpha: int
    direct_link_level: int = -1
    rounds: int = 0
    messages: int = 0
    message_kinds: set = field(default_factory=set)
    splits: list = field(default_factory=list)
    split_counts: Counter = field(default_factory=Counter)
    priorities: dict = field(default_factory=dict)
    dummies_removed: int = 0
    dummies_added: int = 0
    pair_lifts: int = 0
    sign_violations: int = 0
    nonmonotone_nodes: int = 0
    lower_update: bool = False

    @property
    def medians(self) -> dict:
        return {(s.level, s.members[0]): s.median for s in self.splits}


def band_group(M: PriorityValue, t: int) -> Optional[int]:
    """Group id whose negative priority band holds M, or None for M >= 0.

    A group g occupies [-g*t, -g*t + t - 1] because its members add a
    timestamp below t to -g*t.
    """
    if not M.negative:
        return None
    return -((M.number) // t)


def detect_g_s(M: PriorityValue, t: int, group_ids) -> Optional[int]:
    g = band_group(M, t)
    return g if g is not None and g in set(group_ids) else None


def split_rule(members, pri: dict, pg: dict, dominating: dict,
               M: PriorityValue, M_origin, t: int, u, v):
    """New bit for every member of a list, plus the case that decided it.

    ``dominating`` maps members to their is-dominating flag for the bit's
    level. Keys are compared as (priority, id) when the median came from a
    member, and by value only when it was pinned.
    """
    n = len(members)

    def high(x):
        if M_origin is None:
            return pri[x] >= M
        return (pri[x], x) >= (M, M_origin)

    info = {"g_s": None, "gs_size": 0, "L_low": 0, "L_high": 0}
    if not M.negative:
        bits = {x: 0 if high(x) else 1 for x in members}
        for x in (u, v):
            if x in bits:
                bits[x] = 0
        case = "case1"
    else:
        g = detect_g_s(M, t, [pg[x] for x in members if pri[x].negative])
        gs = {x for x in members if g is not None and pri[x].negative and pg[x] == g}
        low = sum(1 for x in members if pri[x] < M)
        info.update(g_s=g, gs_size=len(gs), L_low=low, L_high=n - low)
        if not gs:
            bits = {x: 0 if high(x) else 1 for x in members}
            case = "no_gs"
        elif 3 * len(gs) > 2 * n:
            bits = {x: (1 if dominating.get(x) else 0) if x in gs else 0 for x in members}
            case = "gs_large"
        elif 3 * len(gs) < n:
            gs_bit = 0 if n - low < low else 1
            bits = {x: gs_bit if x in gs else (0 if high(x) else 1) for x in members}
            case = "gs_small"
        else:
            bits = {x: 1 if x in gs else 0 for x in members}
            case = "gs_middle"
        ones = sum(bits.values())
        if min(ones, n - ones) == 0 or 3 * max(ones, n - ones) > 2 * n:
            bits = {x: 0 if high(x) else 1 for x in members}
            case = "fallback"
    ones = sum(bits.values())
    if ones == 0 or ones == n:
        # median at an extreme (only possible when pinned): split by rank
        keys = sorted(members, key=lambda x: (pri[x], x))
        top = set(keys[n // 2:])
        bits = {x: 0 if x in top else 1 for x in members}
        case = case + "+rank"
    return bits, case, info


def compute_priorities(S: Topology, u, v, alpha: int, t: int, members) -> tuple[dict, dict]:
    """Priorities P1-P3 from the snapshot, and the group id each negative
    priority was derived from."""
    H = S.height
    pri, pg = {}, {}
    for x in members:
        if x == u or x == v:
            pri[x], pg[x] = INF, None
            continue
        w = _group_partner(S, x, u, v, alpha)
        if w is not None:
            c = _shared_top(S, x, w)
            pri[x] = PriorityValue.of(min(_t(S, x, c), _t(S, w, c)))
            pg[x] = None
        else:
            gx = _g(S, x, alpha)
            pri[x] = PriorityValue.of(-(gx * t) + _t(S, x, alpha + 1))
            pg[x] = gx
    return pri, pg


def _group_partner(S: Topology, x, u, v, level: int):
    """u or v when x shares its group at ``level``, else None. The shared
    group must reach up to both nodes' group bases; a match that stops
    below a base is a leftover id, not a membership."""
    gx = _g(S, x, level)
    for w in (u, v):
        if gx != _g(S, w, level):
            continue
        c = _shared_top(S, x, w)
        if c >= max(S.nodes[x].group_base, S.nodes[w].group_base):
            return w
    return None


def _shared_top(S: Topology, x, w) -> int:
    """Highest level where x and w carry the same group id."""
    return max((i for i in range(S.height) if _g(S, x, i) == _g(S, w, i)), default=-1)


def _t(S: Topology, x, i: int) -> int:
    arr = S.nodes[x].timestamps
    return arr[i] if i < len(arr) else 0


def _g(S: Topology, x, i: int):
    arr = S.nodes[x].group_ids
    return arr[i] if i < len(arr) else x


def _d(S: Topology, x, i: int) -> bool:
    arr = S.nodes[x].dominating
    return arr[i] if i < len(arr) else False


class Transformation:
    def __init__(self, S: Topology, u, v, t: int, seed: int = 0,
                 pinned_medians: Optional[dict] = None):
        if t < 1:
            raise ValueError("request time must be >= 1")
        self.S = S
        self.u, self.v, self.t = u, v, t
        self.rng = random.Random(seed)
        self.pins = dict(pinned_medians or {})
        self.alpha, l_alpha = highest_common_level(S, u, v)
        self.l_alpha = list(l_alpha)
        self.members = [x for x in self.l_alpha if not S.nodes[x].is_dummy]
        self.report = TransformReport(u, v, t, self.alpha)
        self.topo = S.copy()
        span = S.height + len(self.members) + 2
        self.T = {x: _pad(S.nodes[x].timestamps, span, 0) for x in self.members}
        self.G = {x: _pad(S.nodes[x].group_ids, span, x) for x in self.members}
        self.D = {x: _pad(S.nodes[x].dominating, span, False) for x in self.members}
        self.B = {x: S.nodes[x].group_base for x in self.members}
        self.newbits = {x: [] for x in self.members}
        self.median_at = defaultdict(dict)  # x -> list level -> median
        self.uv_levels = defaultdict(set)  # x -> levels where x shares u's list
        self.rule_splits = defaultdict(set)  # x -> bit levels where its group parted
        self.g_lower_nodes: set = set()
        self.fresh = 1 + max([int(x) for x in S.real_ids] +
                             [int(g) for r in S.nodes.values() for g in r.group_ids])

    # -- cost bookkeeping ---------------------------------------------------

    def _charge(self, rounds: int, messages: int, *kinds: str) -> None:
        self.report.rounds += rounds
        self.report.messages += messages
        self.report.message_kinds.update(kinds)

    # -- steps ----------------------------------------------------------------

    def notify(self) -> None:
        """u and v push their per-level state through l_alpha; dummies in
        l_alpha destroy themselves on receipt."""
        S, a = self.S, self.S.a
        H = S.height
        self._charge(a * (H - self.alpha) + H - 1, len(self.l_alpha) * H * 2, "notify")
        gone = {x for x in self.l_alpha if S.nodes[x].is_dummy}
        if gone:
            for x in gone:
                del self.topo.nodes[x]
            self.topo.order = [x for x in self.topo.order if x not in gone]
            self.report.dummies_removed += len(gone)
        self.topo.touch()

    def prioritize_and_merge(self) -> None:
        S, u, v, alpha = self.S, self.u, self.v, self.alpha
        self.pri, self.pg = compute_priorities(S, u, v, alpha, self.t, self.members)
        self.report.priorities = dict(self.pri)
        for x, p in self.pri.items():
            if self.pg[x] is None and x not in (u, v) and p.number <= 0:
                self.report.sign_violations += 1
            if self.pg[x] is not None and not p.negative:
                self.report.sign_violations += 1
        merge_groups_at_alpha(self)

    def run_splits(self) -> None:
        alpha = self.alpha
        level = alpha
        current = [self.members]
        for x in self.members:
            self.uv_levels[x].add(alpha)
        while current:
            level_rounds = 0
            produced = []
            for lst in current:
                split = self.split_list(level, lst)
                self.report.splits.append(split)
                level_rounds = max(level_rounds, split.rounds)
                for side, bit in ((split.zero, 0), (split.one, 1)):
                    for x in side:
                        self.newbits[x].append(bit)
                    produced.append((side, split.contains_uv and bit == 0))
            self.report.rounds += level_rounds
            level += 1
            self.assign_group_ids(level, produced)
            current = [side for side, _ in produced if len(side) >= 2]

    def split_list(self, level: int, lst: list) -> ListSplit:
        u, v, a = self.u, self.v, self.S.a
        contains_uv = u in lst
        if contains_uv and len(lst) == 2:
            self.report.direct_link_level = level
            if level == self.alpha:
                # already the two of them: keep their current sides
                zero = [x for x in lst if self.S.nodes[x].bit(level + 1) == 0]
                one = [x for x in lst if self.S.nodes[x].bit(level + 1) == 1]
            else:
                zero, one = [u], [v]
            self._charge(0, 2, "bit")
            return ListSplit(level, list(lst), None, "pair", zero, one, 1, True)

        rounds = 0
        sl = amf.build_balanced_skiplist(lst, a, rng=self.rng)
        rounds += sl.construction_rounds
        self.report.message_kinds.add("skiplist")
        self.report.messages += sum(len(lv) for lv in sl.levels)
        pin = self.pins.get((level, lst[0]))
        if pin is None and contains_uv:
            pin = self.pins.get(level)
        if pin is not None:
            M = pin if isinstance(pin, PriorityValue) else PriorityValue.of(pin)
            M_origin = None
            b_rounds, b_msgs = amf.broadcast(sl)
            rounds += b_rounds
            self._charge(0, b_msgs, "median")
        else:
            res = amf.approx_median(sl, [self.pri[x] for x in lst])
            M, M_origin = res.value, res.origin
            rounds += res.rounds
            self._charge(0, res.messages, "ranked", "median")
        dom = {x: self.D[x][level + 1] for x in lst}
        bits, case, info = split_rule(lst, self.pri, self.pg, dom, M, M_origin,
                                      self.t, u, v)
        if M.negative and detect_g_s(M, self.t, [self.pg[x] for x in lst if self.pri[x].negative]) is not None:
            _, s_rounds, s_msgs = amf.distributed_sum(sl, [[1, 0, 0, 0]] * len(lst))
            rounds += s_rounds
            self._charge(0, s_msgs, "count")
        # neighbour discovery and chain check, each at most a steps
        rounds += 2 * a
        self._charge(0, 4 * len(lst), "bit")
        if case == "case1":
            for x in lst:
                self.D[x][level + 1] = bits[x] == 0
        for x in lst:
            self.median_at[x][level] = M
        zero = [x for x in lst if bits[x] == 0]
        one = [x for x in lst if bits[x] == 1]
        # groups of this list that now straddle both sides
        by_gid = defaultdict(set)
        for x in lst:
            by_gid[self.G[x][level]].add(bits[x])
        parted = {g for g, bs in by_gid.items() if len(bs) == 2}
        for g in parted:
            if contains_uv and g == self.G[u][level]:
                self.report.split_counts["communicating"] += 1
            elif case == "gs_large" and g == info["g_s"]:
                self.report.split_counts["large_group"] += 1
            else:
                self.report.split_counts[case] += 1
            for x in lst:
                if self.G[x][level] == g:
                    self.rule_splits[x].add(level + 1)
        if parted:
            b_rounds, b_msgs = amf.broadcast(sl)
            rounds += b_rounds
            self._charge(0, b_msgs, "gid")
        return ListSplit(level, list(lst), M, case, zero, one, rounds, contains_uv, info["g_s"])

    def assign_group_ids(self, level: int, produced: list) -> None:
        """Group ids at ``level`` for every list formed there."""
        u, t = self.u, self.t
        outside = {_g(self.S, y, level) for y in self.S.real_ids
                   if y not in self.pri and level < self.S.height}
        reserved = set(outside)
        if any(is_uv for _, is_uv in produced):
            reserved.add(u)
        assigned: set = set()
        fragments = defaultdict(list)  # old id -> [(list index, members)]
        for k, (side, is_uv) in enumerate(produced):
            if is_uv:
                # only the merged group takes u's id; other groups sharing
                # the list keep theirs
                for x in side:
                    if self.pg[x] is None:
                        self.G[x][level] = u
                        self.uv_levels[x].add(level)
            by_old = defaultdict(list)
            for x in side:
                if is_uv and self.pg[x] is None:
                    continue
                by_old[_g(self.S, x, level)].append(x)
            for g, xs in by_old.items():
                fragments[g].append(xs)
        for g, frags in fragments.items():
            for i, xs in enumerate(frags):
                if i == 0 and g not in reserved and g not in assigned:
                    new = g
                else:
                    new = next((y for y in xs if y not in reserved and y not in assigned), None)
                    if new is None:
                        new = self.fresh
                        self.fresh += 1
                assigned.add(new)
                for x in xs:
                    self.G[x][level] = new
        for side, is_uv in produced:
            for x in side:
                if is_uv and self.pg[x] is None:
                    continue
                self.pri[x] = PriorityValue.of(-(self.G[x][level] * t) + _t(self.S, x, level + 1))
                self.pg[x] = self.G[x][level]

    def write_structure(self) -> None:
        topo, S, alpha = self.topo, self.S, self.alpha
        for x in self.members:
            topo.nodes[x].bits = list(S.nodes[x].bits[:alpha]) + self.newbits[x]
        topo.touch()

    def group_split_levels(self) -> dict:
        """Levels d >= alpha at which a node's old group is no longer one
        group (same list, same id) afterwards."""
        S, topo, alpha = self.S, self.topo, self.alpha
        topo._structure()
        where = topo._where
        out = defaultdict(set)
        for d in range(alpha, S.height):
            groups = defaultdict(list)
            for x in self.members:
                if d < len(S._structure()) and x in S._where[d]:
                    lst = S._where[d][x][0]
                    groups[(lst[0], _g(S, x, d))].append(x)
            for xs in groups.values():
                if len(xs) < 2:
                    continue
                keys = set()
                for x in xs:
                    if d < len(where) and x in where[d]:
                        keys.add((where[d][x][0][0], self.G[x][d]))
                    else:
                        keys.add(("alone", x))
                if len(keys) > 1:
                    for x in xs:
                        out[x].add(d)
        return out

    def finish(self) -> Topology:
        topo = self.topo
        self.write_structure()
        H1 = topo.height
        self.group_splits = self.group_split_levels()
        update_lower_group_ids(self)
        update_group_bases(self)
        apply_timestamps(self)
        for x in self.members:
            rec = topo.nodes[x]
            rec.timestamps = self.T[x][:H1]
            rec.group_ids = self.G[x][:H1]
            rec.dominating = self.D[x][:H1]
            rec.group_base = min(self.B[x], H1 - 1)
        pair = frozenset((self.u, self.v))
        added = topo.repair(self.rng, avoid=pair, tidy=False)
        while len(topo.list_of(self.report.direct_link_level, self.u)) > 2:
            self.lift_pair()
            added += topo.repair(self.rng, avoid=pair, tidy=False)
        topo._collapse()
        topo.normalize()
        self.report.direct_link_level = next(
            d for d in range(topo.height) if len(topo.list_of(d, self.u)) == 2)
        self.report.dummies_added = len(added)
        if added:
            self._charge(self.S.a, 0, "bit")
        for x in self.members:
            T = topo.nodes[x].timestamps
            if any(T[i] > T[i + 1] for i in range(len(T) - 1)):
                self.report.nonmonotone_nodes += 1
        return topo


    def lift_pair(self) -> None:
        """Dummies that repair pushed into the pair's list are split off the
        way the list would have split them: u and v keep the 0 side and part
        one level higher."""
        topo, u, v, t = self.topo, self.u, self.v, self.t
        dp = self.report.direct_link_level
        intruders = [x for x in topo.list_of(dp, u) if x not in (u, v)]
        for w in (u, v):
            rec = topo.nodes[w]
            rec.bits.insert(dp, 0)
            rec.timestamps.insert(dp + 1, t)
            rec.group_ids.insert(dp + 1, u)
            rec.dominating.insert(dp + 1, False)
            if rec.group_base > dp:
                rec.group_base += 1
        for x in intruders:
            rec = topo.nodes[x]
            del rec.bits[dp:]
            rec.bits.append(1)
            topo.place(x, dp + 1, self.rng, frozenset((u, v)))
        self.report.direct_link_level = dp + 1
        self.report.pair_lifts += 1
        topo.normalize()


def _pad(arr, n, fill) -> list:
    return list(arr) + [fill] * (n - len(arr))


def merge_groups_at_alpha(tr: Transformation) -> None:
    """Both communicating groups at alpha take u's id; any unrelated group
    already named u is renamed so ids stay unambiguous in l_alpha."""
    S, u, alpha = tr.S, tr.u, tr.alpha
    clash = []
    for x in tr.members:
        if tr.pg[x] is None:
            tr.G[x][alpha] = u
        elif _g(S, x, alpha) == u:
            clash.append(x)
    if clash:
        used = {tr.G[x][alpha] for x in tr.members if x not in clash}
        new = next((y for y in clash if y not in used), None)
        if new is None:
            new = tr.fresh
            tr.fresh += 1
        for x in clash:
            tr.G[x][alpha] = new


def update_lower_group_ids(tr: Transformation) -> None:
    """Make u's and v's old groups below alpha share ids afterwards."""
    S, u, v, alpha = tr.S, tr.u, tr.v, tr.alpha
    if alpha == 0 or _g(S, u, alpha - 1) == _g(S, v, alpha - 1):
        return
    tr.report.lower_update = True
    bu, bv = S.nodes[u].group_base, S.nodes[v].group_base
    src = u if bu <= bv else v
    g_lower = [_g(S, src, i) for i in range(alpha)]
    lo, hi = min(bu, bv), max(bu, bv)
    touched = []
    if hi <= alpha:
        tags = {_g(S, u, hi), _g(S, v, hi)}
        for y in S.list_of(hi, u):
            if S.nodes[y].is_dummy or _g(S, y, hi) not in tags:
                continue
            by = S.nodes[y].group_base
            if by > hi and y not in (u, v) and _g(S, y, hi) != _g(S, y, by):
                continue  # its id at hi is a leftover, not a membership
            touched.append(y)
            if y not in tr.T:
                tr.T[y] = list(S.nodes[y].timestamps)
                tr.G[y] = list(S.nodes[y].group_ids)
                tr.B[y] = S.nodes[y].group_base
            tr.B[y] = lo
            for i in range(alpha):
                tr.G[y][i] = g_lower[i]
        H = S.height
        tr._charge(S.a * (H - hi) + alpha - 1, len(S.list_of(hi, u)) * alpha, "glower")
    for x in tr.members:
        if tr.G[x][alpha] == u:
            touched.append(x)
            for i in range(alpha):
                tr.G[x][i] = g_lower[i]
    tr.g_lower_nodes = set(touched)
    for y in touched:
        if y not in tr.pri:
            rec = tr.topo.nodes[y]
            rec.group_ids = tr.G[y][:len(rec.group_ids)]
            rec.group_base = tr.B[y]


def update_group_bases(tr: Transformation) -> None:
    alpha = tr.alpha
    for x in tr.members:
        splits = sorted(d for d in tr.group_splits.get(x, ()) if d >= alpha)
        for d in splits:
            if tr.B[x] == d:
                tr.B[x] -= 1
        if splits and tr.B[x] == alpha and splits[0] > alpha + 1:
            tr.B[x] = splits[0] - 1
        tr.B[x] = max(0, tr.B[x])


def apply_timestamps(tr: Transformation) -> None:
    S, topo, u, v, t, alpha = tr.S, tr.topo, tr.u, tr.v, tr.t, tr.alpha
    T, B = tr.T, tr.B
    # T1: the pair's own list and the level above become current
    dp = tr.report.direct_link_level
    for w in (u, v):
        T[w][dp] = t
        T[w][dp + 1] = t
    for i in range(dp - 1, min(B[u], B[v]) - 1, -1):
        T[u][i] = T[v][i] = max(T[u][i], T[v][i])
    # T2: nodes still beside u one level up inherit a stamp at least the median
    for x in tr.members:
        if x in (u, v):
            continue
        c_near = max(S.common_prefix(x, u), S.common_prefix(x, v))
        for d, M in sorted(tr.median_at[x].items()):
            if d < alpha or (d + 1) not in tr.uv_levels[x]:
                continue
            if M.infinite:
                continue
            if M.number <= 0:
                continue
            found = next((_t(S, x, c) for c in range(alpha, c_near)
                          if _t(S, x, c) > M.number), None)
            T[x][d + 1] = found if found is not None else max(0, M.number)
    # T3: nodes pulled away from their communicating partner backfill
    for x in tr.members:
        if x in (u, v):
            continue
        w = _group_partner(S, x, u, v, alpha)
        if w is None:
            continue
        c1 = S.common_prefix(w, x)
        c2 = topo.common_prefix(w, x)
        if c1 - 1 > c2 + 1:
            for i in range(c1 - 1, c2, -1):
                T[x][i] = T[x][c1]
    # T4: receivers of the lower group ids fill the gap under their stamps
    for x in tr.g_lower_nodes:
        arr = T[x]
        gap = next((d for d in range(len(arr) - 1) if arr[d] == 0 and arr[d + 1] != 0), None)
        if gap is not None and gap >= B[x]:
            for i in range(gap, B[x] - 1, -1):
                arr[i] = arr[gap + 1]
        if x not in tr.pri:
            topo.nodes[x].timestamps = arr[:len(topo.nodes[x].timestamps)]
    # T5: a parted group keeps its stamp one level lower
    for x in tr.members:
        for d in sorted(tr.group_splits.get(x, ())):
            if d >= 1 and T[x][d - 1] == 0:
                T[x][d - 1] = T[x][d]
    # T6: nothing below the group base
    for x in tr.members:
        for i in range(min(B[x], len(T[x]))):
            T[x][i] = 0


def transform(topo: Topology, u, v, time: int, seed: int = 0,
              pinned_medians: Optional[dict] = None,
              check: bool = True) -> tuple[Topology, TransformReport]:
    """Run the full transformation for request (u, v) at ``time``.

    Returns the new topology and a report; the input is left unchanged.
    ``pinned_medians`` maps a list level (for the list holding u and v) or a
    (level, leftmost id) pair to a fixed median value.
    """
    tr = Transformation(topo, u, v, time, seed, pinned_medians)
    tr.notify()
    tr.prioritize_and_merge()
    tr.run_splits()
    new = tr.finish()
    if check:
        problems = validate(new)
        if problems:
            raise TransformError(f"invalid topology after ({u},{v}) at t={time}: "
                                 + "; ".join(map(str, problems[:5])), problems)
    return new, tr.report


# -- churn -----------------------------------------------------------------

def add_node(topo: Topology, x: int, seed: int = 0) -> list:
    """Join with default state; returns any dummies inserted."""
    if x in topo.nodes:
        raise TopologyError(f"duplicate id {x}")
    if not isinstance(x, int) or x < 1:
        raise ValueError("node ids must be positive integers")
    rng = random.Random(seed)
    rec = fresh_record(x, topo.height)
    topo.insert_record(rec)
    topo.place(x, 0, rng)
    topo.normalize()
    rec.group_base = topo.singleton_level(x)
    return topo.repair(rng)


def remove_node(topo: Topology, x, seed: int = 0) -> list:
    """Leave; neighbours splice around x and repair balance."""
    if x not in topo.nodes:
        raise KeyError(f"unknown node {x}")
    if topo.nodes[x].is_dummy:
        raise ValueError(f"{x} is a dummy")
    if topo.n_real == 1:
        raise TopologyError("cannot remove the last node")
    topo.delete(x)
    return topo.repair(random.Random(seed))
