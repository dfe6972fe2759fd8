#!/usr/bin/env python3
"""Run a grid of simulations and print one summary row per configuration.

    python3 scripts/sweep.py --nodes 16 64 --balance-a 3 4 --workloads uniform zipf --requests 200
"""

import argparse
import csv
import sys
import time

from dsg.simulator import SimConfig, run_sequence
from dsg.workloads import generate

FIELDS = ["n", "a", "workload", "requests", "seconds", "avg_cost", "ws_bound", "max_height",
          "max_direct_link_level", "max_dummies", "max_message_bits", "violations"]


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--nodes", type=int, nargs="+", default=[16, 64])
    p.add_argument("--balance-a", type=int, nargs="+", default=[3])
    p.add_argument("--workloads", nargs="+", default=["uniform", "zipf"])
    p.add_argument("--requests", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--checks", choices=["full", "sampled"], default="sampled")
    args = p.parse_args()

    out = csv.DictWriter(sys.stdout, FIELDS)
    out.writeheader()
    for n in args.nodes:
        for a in args.balance_a:
            for kind in args.workloads:
                cfg = SimConfig(n=n, a=a, seed=args.seed, checks=args.checks,
                                abort_on_violation=False)
                start = time.perf_counter()
                res = run_sequence(cfg, generate(kind, n, args.requests, args.seed))
                row = {k: res.summary.get(k) for k in FIELDS}
                row.update(n=n, a=a, workload=kind,
                           seconds=round(time.perf_counter() - start, 2))
                out.writerow(row)
                sys.stdout.flush()


if __name__ == "__main__":
    main()
