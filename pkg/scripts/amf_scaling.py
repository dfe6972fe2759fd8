#!/usr/bin/env python3
"""Median rounds and worst rank error of the approximate median over seeds.

    python3 scripts/amf_scaling.py --sizes 128 256 512 1024 --balance-a 2 3 4 --seeds 200
"""

import argparse
import random
import statistics

from dsg.amf import approx_median, build_balanced_skiplist
from dsg.oracle import oracle_rank


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--sizes", type=int, nargs="+", default=[128, 256, 512, 1024])
    p.add_argument("--balance-a", type=int, nargs="+", default=[2, 3, 4])
    p.add_argument("--seeds", type=int, default=200)
    args = p.parse_args()

    print("a,n,median_rounds,max_rounds,worst_rank_offset,allowed_offset")
    for a in args.balance_a:
        for n in args.sizes:
            rounds, worst = [], 0.0
            for seed in range(args.seeds):
                rng = random.Random(f"{a}/{n}/{seed}")
                vals = [rng.random() for _ in range(n)]
                res = approx_median(build_balanced_skiplist(list(range(n)), a, seed=seed), vals)
                rounds.append(res.rounds)
                rank = oracle_rank(vals, list(range(n)), res.value, res.origin)
                worst = max(worst, abs(rank - n / 2))
            print(f"{a},{n},{statistics.median(rounds):g},{max(rounds)},{worst:g},{n / (2 * a):g}")


if __name__ == "__main__":
    main()
