"""Sequential request loop: route, transform, record, check, charge.

Each request costs routing distance + transformation rounds + 1 delivery
round. Checks run after every transformation and are tallied by kind in
the run summary.
"""

from __future__ import annotations

import csv
import hashlib
import io
import json
import math
import random
from collections import Counter
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Iterable, Optional

from .congest import Encoding, bit_budget
from .engine import transform
from .oracle import CommunicationGraph, group_connectivity_check, sample_groups, working_set_number
from .routing import route
from .topology import Topology, TopologyError, build_initial, export_topology, validate
from .workloads import Request

CSV_COLUMNS = ["t", "u", "v", "alpha", "d", "rho", "total", "messages", "max_bits",
               "height", "dummies", "ws_T", "ws_logT", "direct_link_level"]


class SimulationError(Exception):
    def __init__(self, message: str, dump: str = ""):
        super().__init__(message)
        self.dump = dump


@dataclass
class SimConfig:
    n: int
    a: int = 3
    seed: int = 0
    checks: str = "full"  # "full" or "sampled"
    check_rate: float = 0.1  # fraction of requests fully validated when sampled
    group_samples: int = 0  # (level, member) pairs checked per request
    abort_on_violation: bool = True
    max_run: Optional[int] = None

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("n must be >= 2")
        if self.a < 2:
            raise ValueError("a must be >= 2")
        if self.checks not in ("full", "sampled"):
            raise ValueError(f"unknown check mode {self.checks!r}")


def request_seed(master: int, t: int) -> int:
    return random.Random(f"{master}/{t}").getrandbits(32)


def link_level_bound(n: int, a: int) -> int:
    return math.ceil(math.log(n, 2 * a / (a + 1)) - 1e-9)


def height_bound(n_total: int) -> int:
    return math.ceil(math.log(n_total, 1.5) - 1e-9) + 1


def ws_distance_bound(T: int, a: int) -> int:
    return a * math.ceil(math.log(T + 1, 1.5) - 1e-9) + a


@dataclass
class RequestRecord:
    t: int
    u: int
    v: int
    alpha: int
    d: int
    rho: int
    total: int
    messages: int
    max_bits: int
    height: int
    dummies: int
    ws_T: int
    ws_logT: float
    direct_link_level: int
    repeat: bool = False
    budget: int = 0
    violations: list = field(default_factory=list)

    def row(self) -> list:
        return [self.t, self.u, self.v, self.alpha, self.d, self.rho, self.total,
                self.messages, self.max_bits, self.height, self.dummies, self.ws_T,
                f"{self.ws_logT:.6f}", self.direct_link_level]


@dataclass
class CostLedger:
    records: list = field(default_factory=list)
    total_cost: int = 0
    total_messages: int = 0
    max_message_bits: int = 0

    def charge(self, d: int, rho: int) -> int:
        return d + rho + 1

    def add(self, rec: RequestRecord) -> None:
        self.records.append(rec)
        self.total_cost += rec.total
        self.total_messages += rec.messages
        self.max_message_bits = max(self.max_message_bits, rec.max_bits)

    @property
    def average(self) -> float:
        return self.total_cost / len(self.records) if self.records else 0.0


class Simulation:
    def __init__(self, cfg: SimConfig, topo: Optional[Topology] = None):
        self.cfg = cfg
        self.topo = topo if topo is not None else build_initial(
            range(1, cfg.n + 1), cfg.a, seed=cfg.seed, max_run=cfg.max_run)
        self.graph = CommunicationGraph()
        self.ledger = CostLedger()
        self.violations: Counter = Counter()
        self.check_rng = random.Random(f"checks/{cfg.seed}")
        self.last_time = 0
        self.max_height = self.topo.height
        self.max_dummies = self.topo.dummy_count
        self.max_link_level = 0
        self.max_ws_ratio = 0.0

    def execute(self, req: Request, pinned_medians: Optional[dict] = None) -> RequestRecord:
        cfg, S = self.cfg, self.topo
        u, v, t = req.u, req.v, req.time
        if u == v:
            raise ValueError(f"self request at t={t}")
        if t <= self.last_time:
            raise ValueError(f"request time {t} not after {self.last_time}")
        for x in (u, v):
            if x not in S.nodes or S.nodes[x].is_dummy:
                raise ValueError(f"unknown node {x} at t={t}")
        n = S.n_real
        T = working_set_number(self.graph, u, v, t, n)
        repeat = self.graph.last(u, v) is not None
        path = route(S, u, v)
        try:
            new, rep = transform(S, u, v, t, seed=request_seed(cfg.seed, t),
                                 pinned_medians=pinned_medians, check=False)
        except TopologyError as exc:
            # no usable topology to continue from
            self.violations["repair_diverged"] += 1
            raise SimulationError(f"t={t} ({u},{v}): {exc}", export_topology(S)) from exc
        d, rho = path.distance, rep.rounds
        total = self.ledger.charge(d, rho)
        self.graph.record(u, v, t)

        n_total = max(len(S.nodes), len(new.nodes))
        max_id = max([int(x) for x in new.real_ids] +
                     [int(g) for r in new.nodes.values() for g in r.group_ids])
        enc = Encoding(max_id=max_id, time=t, height=max(S.height, new.height) + 1,
                       n_total=n_total)
        kinds = set(rep.message_kinds) | {"route", "deliver"}
        max_bits = enc.max_bits(kinds)
        budget = bit_budget(n_total)
        dl = rep.direct_link_level
        rec = RequestRecord(
            t=t, u=u, v=v, alpha=rep.alpha, d=d, rho=rho, total=total,
            messages=rep.messages + path.rounds + 1, max_bits=max_bits,
            height=new.height, dummies=new.dummy_count, ws_T=T,
            ws_logT=math.log2(T) if T > 0 else 0.0, direct_link_level=dl,
            repeat=repeat, budget=budget)

        found = self._check(new, rec, n)
        rec.violations = found
        self.violations.update(found)
        self.topo = new
        self.last_time = t
        self.ledger.add(rec)
        self.max_height = max(self.max_height, new.height)
        self.max_dummies = max(self.max_dummies, new.dummy_count)
        self.max_link_level = max(self.max_link_level, dl)
        if repeat:
            self.max_ws_ratio = max(self.max_ws_ratio, d / math.log2(T + 1))
        if found and cfg.abort_on_violation:
            raise SimulationError(f"t={t} ({u},{v}): " + ", ".join(found),
                                  export_topology(new))
        return rec

    def _check(self, new: Topology, rec: RequestRecord, n: int) -> list[str]:
        cfg = self.cfg
        found = []
        full = cfg.checks == "full" or self.check_rng.random() < cfg.check_rate
        if full:
            found += [f"structure:{p.kind}" for p in validate(new)]
        if sorted(new.list_of(rec.direct_link_level, rec.u)) != sorted((rec.u, rec.v)):
            found.append("direct_link")
        if rec.direct_link_level > link_level_bound(n, cfg.a):
            found.append("link_level_bound")
        if new.height > height_bound(len(new.nodes)):
            found.append("height_bound")
        if rec.repeat and rec.d > ws_distance_bound(rec.ws_T, cfg.a):
            found.append("working_set")
        if rec.max_bits > rec.budget:
            found.append("bit_budget")
        if rec.total != rec.d + rec.rho + 1:
            found.append("cost_identity")
        if cfg.group_samples:
            rng = random.Random(f"groups/{cfg.seed}/{rec.t}")
            samples = sample_groups(new, cfg.group_samples, rng)
            found += ["group_connectivity"] * len(group_connectivity_check(new, self.graph, samples))
        return found

    def summary(self) -> dict:
        recs = self.ledger.records
        return {
            "requests": len(recs),
            "avg_cost": round(self.ledger.average, 6),
            "ws_bound": round(sum(r.ws_logT for r in recs), 6),
            "max_height": self.max_height,
            "max_direct_link_level": self.max_link_level,
            "max_dummies": self.max_dummies,
            "final_dummies": self.topo.dummy_count,
            "max_message_bits": self.ledger.max_message_bits,
            "total_messages": self.ledger.total_messages,
            "max_ws_distance_ratio": round(self.max_ws_ratio, 6),
            "violations": sum(self.violations.values()),
            "violation_kinds": dict(sorted(self.violations.items())),
        }


def trace_csv(records: Iterable[RequestRecord]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in records:
        w.writerow(r.row())
    return buf.getvalue()


def digest(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


@dataclass
class RunResult:
    summary: dict
    records: list
    topology: Topology
    trace: str
    error: Optional[str] = None
    dump: str = ""


def run_sequence(cfg: SimConfig, requests: Iterable[Request],
                 topo: Optional[Topology] = None,
                 pins: Optional[dict] = None) -> RunResult:
    """Run every request in order. ``pins`` maps a request time to pinned
    medians for that transformation. Stops at the first violation when the
    config says to abort, keeping what ran so far."""
    sim = Simulation(cfg, topo)
    error, dump = None, ""
    try:
        for req in requests:
            sim.execute(req, (pins or {}).get(req.time))
    except SimulationError as exc:
        error, dump = str(exc), exc.dump
    trace = trace_csv(sim.ledger.records)
    summary = sim.summary()
    summary["trace_digest"] = digest(trace)
    summary["config"] = asdict(cfg)
    if error:
        summary["aborted"] = error
    return RunResult(summary, sim.ledger.records, sim.topo, trace, error, dump)


def write_outputs(prefix: str | Path, result: RunResult) -> list[Path]:
    """Trace CSV, summary JSON and final topology dump next to ``prefix``."""
    prefix = Path(prefix)
    if prefix.parent and not prefix.parent.exists():
        prefix.parent.mkdir(parents=True, exist_ok=True)
    paths = [Path(f"{prefix}.trace.csv"), Path(f"{prefix}.summary.json"),
             Path(f"{prefix}.topology.json")]
    paths[0].write_text(result.trace, encoding="utf-8")
    paths[1].write_text(json.dumps(result.summary, indent=2, sort_keys=True) + "\n",
                        encoding="utf-8")
    paths[2].write_text(export_topology(result.topology) + "\n", encoding="utf-8")
    if result.dump:
        dump_path = Path(f"{prefix}.failure.json")
        dump_path.write_text(result.dump + "\n", encoding="utf-8")
        paths.append(dump_path)
    return paths
