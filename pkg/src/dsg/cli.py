"""Command line runner: build a workload, simulate it, write the trace CSV,
the summary JSON and the final topology dump. Exit status is 0 iff the run
saw no invariant violations."""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass, fields
from typing import Optional

from .scripted import TEN_NODE_PINS, TEN_NODE_TIME, U, V, ten_node_checks, ten_node_state
from .simulator import SimConfig, run_sequence, write_outputs
from .workloads import WORKLOADS, Request, generate


@dataclass
class RunConfig:
    n: int = 16
    a: int = 3
    seed: int = 0
    workload: str = "uniform"
    zipf_s: float = 1.2
    pair_prob: float = 0.5
    clusters: int = 4
    replay: Optional[str] = None
    requests: int = 100
    checks: str = "full"
    check_rate: float = 0.1
    group_samples: int = 0
    out: str = "run"
    keep_going: bool = False
    scenario: Optional[str] = None

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("n must be >= 2")
        if self.a < 2:
            raise ValueError("a must be >= 2")
        if self.requests < 0:
            raise ValueError("requests must be >= 0")
        if self.zipf_s <= 0:
            raise ValueError("zipf exponent must be > 0")
        if self.workload not in WORKLOADS:
            raise ValueError(f"unknown workload {self.workload!r}")
        if self.checks not in ("full", "sampled"):
            raise ValueError(f"unknown check mode {self.checks!r}")
        if not 0 < self.check_rate <= 1:
            raise ValueError("check rate must be in (0, 1]")
        if self.scenario not in (None, "ten-node"):
            raise ValueError(f"unknown scenario {self.scenario!r}")

    def sim_config(self) -> SimConfig:
        return SimConfig(n=self.n, a=self.a, seed=self.seed, checks=self.checks,
                         check_rate=self.check_rate, group_samples=self.group_samples,
                         abort_on_violation=not self.keep_going)


def generate_workload(cfg: RunConfig) -> list[Request]:
    return generate(cfg.workload, cfg.n, cfg.requests, cfg.seed, zipf_s=cfg.zipf_s,
                    pair_prob=cfg.pair_prob, clusters=cfg.clusters,
                    replay_path=cfg.replay)


def run(cfg: RunConfig) -> tuple[int, dict]:
    """Simulate ``cfg``, write the output files, return (exit code, summary)."""
    if cfg.scenario == "ten-node":
        state = ten_node_state()
        sim_cfg = SimConfig(n=state.n_real, a=state.a, seed=cfg.seed, checks=cfg.checks,
                            abort_on_violation=not cfg.keep_going)
        result = run_sequence(sim_cfg, [Request(TEN_NODE_TIME, U, V)], topo=state,
                              pins={TEN_NODE_TIME: TEN_NODE_PINS})
        checks = ten_node_checks(cfg.seed)
        result.summary["scenario"] = "ten-node"
        result.summary["scenario_checks"] = checks
        result.summary["scenario_match"] = all(checks.values())
    else:
        result = run_sequence(cfg.sim_config(), generate_workload(cfg))
    result.summary["run_config"] = asdict(cfg)
    paths = write_outputs(cfg.out, result)
    result.summary["files"] = [str(p) for p in paths]
    code = 0 if result.summary["violations"] == 0 and result.error is None else 1
    return code, result.summary


FLAG_FIELDS = {
    "nodes": "n", "balance_a": "a", "seed": "seed", "workload": "workload",
    "zipf_s": "zipf_s", "pair_prob": "pair_prob", "clusters": "clusters",
    "requests": "requests", "replay": "replay", "checks": "checks", "out": "out",
    "check_rate": "check_rate", "group_samples": "group_samples",
    "keep_going": "keep_going", "scenario": "scenario",
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="dsg", description=__doc__)
    p.add_argument("--config", help="JSON file with RunConfig keys; flags override it")
    p.add_argument("--nodes", type=int)
    p.add_argument("--balance-a", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--workload", choices=sorted(WORKLOADS))
    p.add_argument("--zipf-s", type=float)
    p.add_argument("--pair-prob", type=float)
    p.add_argument("--clusters", type=int)
    p.add_argument("--requests", type=int)
    p.add_argument("--replay", help="request file, one 't u v' per line")
    p.add_argument("--checks", help="'full' or 'sampled' / 'sampled:RATE'")
    p.add_argument("--check-rate", type=float)
    p.add_argument("--group-samples", type=int)
    p.add_argument("--out", help="output path prefix")
    p.add_argument("--scenario", choices=["ten-node"],
                   help="replay the ten-node walkthrough instead of a workload")
    p.add_argument("--keep-going", action="store_true", default=None,
                   help="record violations instead of stopping at the first")
    return p


def config_from_args(args: argparse.Namespace) -> RunConfig:
    values: dict = {}
    if args.config:
        with open(args.config, encoding="utf-8") as fh:
            values = json.load(fh)
        known = {f.name for f in fields(RunConfig)}
        unknown = set(values) - known
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
    for flag, key in FLAG_FIELDS.items():
        val = getattr(args, flag)
        if val is not None:
            values[key] = val
    checks = values.get("checks")
    if isinstance(checks, str) and checks.startswith("sampled:"):
        values["checks"] = "sampled"
        values["check_rate"] = float(checks.split(":", 1)[1])
    if values.get("replay") and "workload" not in values:
        values["workload"] = "replay"
    return RunConfig(**values)


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = config_from_args(args)
    except (ValueError, TypeError, OSError) as exc:
        parser.error(str(exc))
    try:
        code, summary = run(cfg)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    keys = ["requests", "avg_cost", "ws_bound", "max_height", "max_direct_link_level",
            "max_dummies", "violations"]
    print(json.dumps({k: summary[k] for k in keys if k in summary}))
    if "scenario_match" in summary:
        print(f"scenario_match: {summary['scenario_match']}")
    if "aborted" in summary:
        print(f"aborted: {summary['aborted']}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
