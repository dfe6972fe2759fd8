"""Open-loop request streams. Every generator is a pure function of its
arguments and the seed, independent of the topology."""

from __future__ import annotations

import bisect
import itertools
import random
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable


@dataclass(frozen=True)
class Request:
    time: int
    u: int
    v: int


def _check(n: int, count: int) -> None:
    if n < 2:
        raise ValueError("need at least two nodes")
    if count < 0:
        raise ValueError("request count must be >= 0")


def _other(rng: random.Random, n: int, u: int) -> int:
    v = rng.randrange(1, n)
    return v + 1 if v >= u else v


def uniform(n: int, count: int, seed: int) -> list[Request]:
    _check(n, count)
    rng = random.Random(seed)
    out = []
    for t in range(1, count + 1):
        u = rng.randint(1, n)
        out.append(Request(t, u, _other(rng, n, u)))
    return out


def zipf(n: int, count: int, seed: int, s: float = 1.2) -> list[Request]:
    """Source and destination both drawn by rank; node id = rank."""
    _check(n, count)
    if s <= 0:
        raise ValueError("zipf exponent must be > 0")
    rng = random.Random(seed)
    cum = list(itertools.accumulate(1.0 / k ** s for k in range(1, n + 1)))
    total = cum[-1]

    def draw() -> int:
        return min(n, bisect.bisect_left(cum, rng.random() * total) + 1)

    out = []
    for t in range(1, count + 1):
        u = draw()
        v = draw()
        while v == u:
            v = draw()
        out.append(Request(t, u, v))
    return out


def repeated_pair(n: int, count: int, seed: int, p: float = 0.5) -> list[Request]:
    """One fixed pair with probability p, otherwise a uniform pair."""
    _check(n, count)
    if not 0 <= p <= 1:
        raise ValueError("pair probability must be in [0, 1]")
    rng = random.Random(seed)
    a = rng.randint(1, n)
    b = _other(rng, n, a)
    out = []
    for t in range(1, count + 1):
        if rng.random() < p:
            out.append(Request(t, a, b))
        else:
            u = rng.randint(1, n)
            out.append(Request(t, u, _other(rng, n, u)))
    return out


def cluster(n: int, count: int, seed: int, k: int = 4, cross: float = 0.05) -> list[Request]:
    """Ids are shuffled into k cliques; traffic stays inside a clique except
    for a ``cross`` fraction of uniform pairs."""
    _check(n, count)
    if not 1 <= k <= n // 2:
        raise ValueError("cluster count must be in [1, n/2]")
    rng = random.Random(seed)
    ids = list(range(1, n + 1))
    rng.shuffle(ids)
    groups = [ids[i::k] for i in range(k)]
    out = []
    for t in range(1, count + 1):
        if rng.random() < cross:
            u = rng.randint(1, n)
            v = _other(rng, n, u)
        else:
            g = groups[rng.randrange(k)]
            u, v = rng.sample(g, 2)
        out.append(Request(t, u, v))
    return out


def parse_replay(lines: Iterable[str]) -> list[Request]:
    """One request per line, ``t u v``; blank lines and ``#`` comments are
    skipped; times must increase."""
    out: list[Request] = []
    for no, line in enumerate(lines, 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 3:
            raise ValueError(f"line {no}: expected 't u v', got {line!r}")
        t, u, v = (int(p) for p in parts)
        if u == v:
            raise ValueError(f"line {no}: self request")
        if out and t <= out[-1].time:
            raise ValueError(f"line {no}: time {t} does not increase")
        out.append(Request(t, u, v))
    return out


def replay(path: str | Path) -> list[Request]:
    with open(path, encoding="utf-8") as fh:
        return parse_replay(fh)


WORKLOADS = ("uniform", "zipf", "repeated_pair", "cluster", "replay")


def generate(kind: str, n: int, count: int, seed: int, *, zipf_s: float = 1.2,
             pair_prob: float = 0.5, clusters: int = 4,
             replay_path: str | None = None) -> list[Request]:
    if kind == "uniform":
        return uniform(n, count, seed)
    if kind == "zipf":
        return zipf(n, count, seed, zipf_s)
    if kind == "repeated_pair":
        return repeated_pair(n, count, seed, pair_prob)
    if kind == "cluster":
        return cluster(n, count, seed, clusters)
    if kind == "replay":
        if replay_path is None:
            raise ValueError("replay workload needs a file")
        reqs = replay(replay_path)
        return reqs if count <= 0 else reqs[:count]
    raise ValueError(f"unknown workload {kind!r}")
