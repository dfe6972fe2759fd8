"""Acceptance criteria. Each test appends one PASS/FAIL line that the
terminal summary prints, then asserts."""

import random
import statistics
import time
from collections import Counter

import pytest

import conftest
from dsg import cli
from dsg.amf import approx_median, build_balanced_skiplist, distributed_sum
from dsg.congest import bit_budget
from dsg.oracle import CommunicationGraph, oracle_rank, working_set_number
from dsg.scripted import cluster_script, ten_node_checks
from dsg.simulator import SimConfig, height_bound, link_level_bound, run_sequence
from dsg.workloads import generate

from helpers import direct_sum

STRUCT_NODES = (16, 64, 256)
STRUCT_A = (3, 4)
STRUCT_KINDS = ("uniform", "zipf")
TIME_LIMIT = 300.0


def report(number: int, ok: bool, detail: str) -> None:
    line = f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}"
    conftest.ACCEPTANCE_LINES.append(line)
    print(line)


@pytest.fixture(scope="session")
def structural_runs():
    """1000 requests for every (n, a, workload) with full checks after each."""
    runs = {}
    for n in STRUCT_NODES:
        for a in STRUCT_A:
            for kind in STRUCT_KINDS:
                cfg = SimConfig(n=n, a=a, seed=0, checks="full", abort_on_violation=False)
                reqs = generate(kind, n, 1000, 0)
                start = time.perf_counter()
                res = run_sequence(cfg, reqs)
                runs[(n, a, kind)] = (res, time.perf_counter() - start)
    return runs


def kinds_over(runs, prefix=""):
    total = Counter()
    for res, _ in runs.values():
        for r in res.records:
            total.update(k for k in r.violations if k.startswith(prefix))
    return total


def test_criterion_01_structural_validity(structural_runs):
    structure = kinds_over(structural_runs, "structure:")
    steps = sum(len(res.records) for res, _ in structural_runs.values())
    bad_steps = sum(1 for res, _ in structural_runs.values() for r in res.records
                    if any(k.startswith("structure:") for k in r.violations))
    slowest = max(structural_runs.items(), key=lambda kv: kv[1][1])
    (n, a, kind), (_, secs) = slowest
    complete = all(len(res.records) == 1000 and res.error is None
                   for res, _ in structural_runs.values())
    ok = not structure and complete and secs < TIME_LIMIT
    kinds = ", ".join(f"{k}={c}" for k, c in sorted(structure.items())) or "none"
    worst_dummies = max(res.summary["max_dummies"] for res, _ in structural_runs.values())
    report(1, ok, f"{bad_steps}/{steps} steps with structure violations ({kinds}); "
                  f"max dummies {worst_dummies}; slowest config n={n} a={a} {kind} {secs:.1f}s")
    assert complete
    assert secs < TIME_LIMIT
    assert not structure


def test_criterion_02_direct_link(structural_runs):
    bad = kinds_over(structural_runs)
    misses = bad["direct_link"] + bad["link_level_bound"]
    worst = max(res.summary["max_direct_link_level"] - link_level_bound(n, a)
                for (n, a, _), (res, _) in structural_runs.items())
    steps = sum(len(res.records) for res, _ in structural_runs.values())
    report(2, misses == 0, f"{steps - bad['direct_link']}/{steps} size-2 lists; "
                           f"{bad['link_level_bound']} over the level bound; "
                           f"max level minus bound {worst}")
    assert misses == 0


def test_criterion_03_height(structural_runs):
    over = 0
    slack = []
    for res, _ in structural_runs.values():
        for r in res.records:
            bound = height_bound(r.dummies + res.summary["config"]["n"])
            over += r.height > bound
            slack.append(bound - r.height)
    report(3, over == 0, f"{over} steps over the height bound; min slack {min(slack)}")
    assert over == 0


def test_criterion_04_amf_rank():
    a = 4
    misses = {}
    for n in (64, 512, 4096):
        rng = random.Random(f"rank/{n}")
        miss = 0
        for trial in range(1000):
            spread = rng.choice((1, 2, 10, 1000))
            vals = [rng.randrange(spread * n) for _ in range(n)]
            sl = build_balanced_skiplist(list(range(n)), a, seed=trial)
            res = approx_median(sl, vals)
            rank = oracle_rank(vals, list(range(n)), res.value, res.origin)
            miss += abs(rank - n / 2) > n / (2 * a)
        misses[n] = miss
    ok = not any(misses.values())
    report(4, ok, "rank misses per n: " + ", ".join(f"{n}:{m}/1000" for n, m in misses.items()))
    assert ok


def test_criterion_05_sum():
    rng = random.Random("sum")
    vectors = [[rng.randint(-2**40, 2**40) for _ in range(5)] for _ in range(1000)]
    sl = build_balanced_skiplist(list(range(1000)), 3, seed=1)
    got = distributed_sum(sl, vectors)[0]
    ok = got == direct_sum(vectors)
    report(5, ok, "1000 vectors of width 5 summed exactly" if ok else f"mismatch {got}")
    assert ok


def test_criterion_06_working_set():
    details = []
    total_bad = 0
    for kind in ("repeated_pair", "cluster"):
        cfg = SimConfig(n=64, a=3, seed=0, checks="sampled", check_rate=0.02,
                        abort_on_violation=False)
        res = run_sequence(cfg, generate(kind, 64, 2000, 0))
        repeats = sum(r.repeat for r in res.records)
        bad = res.summary["violation_kinds"].get("working_set", 0)
        total_bad += bad
        details.append(f"{kind}: {bad}/{repeats} repeats over bound, "
                       f"max d/log2(T+1) {res.summary['max_ws_distance_ratio']:.3f}")
    report(6, total_bad == 0, "; ".join(details))
    assert total_bad == 0


def test_criterion_07_group_connectivity():
    details = []
    bad = 0
    for kind in ("uniform", "zipf", "repeated_pair", "cluster"):
        cfg = SimConfig(n=64, a=3, seed=0, checks="sampled", check_rate=0.0,
                        group_samples=50, abort_on_violation=False)
        res = run_sequence(cfg, generate(kind, 64, 500, 0))
        found = res.summary["violation_kinds"].get("group_connectivity", 0)
        bad += found
        details.append(f"{kind}:{found}")
    report(7, bad == 0, "disconnected sampled groups per workload " + ", ".join(details))
    assert bad == 0


def median_rounds(n: int, a: int) -> float:
    rounds = []
    for seed in range(200):
        rng = random.Random(f"rounds/{n}/{a}/{seed}")
        vals = [rng.random() for _ in range(n)]
        sl = build_balanced_skiplist(list(range(n)), a, seed=seed)
        rounds.append(approx_median(sl, vals).rounds)
    return statistics.median(rounds)


def test_criterion_08_amf_rounds():
    worst = []
    ok = True
    for a in (2, 3, 4):
        med = {n: median_rounds(n, a) for n in (128, 256, 512, 1024)}
        for n in (128, 256, 512):
            diff = med[2 * n] - med[n]
            ok &= diff <= a + 2
            worst.append(f"a={a} n={n}: {med[n]:g}->{med[2 * n]:g}")
    report(8, ok, "median rounds " + "; ".join(worst))
    assert ok


def test_criterion_09_cost_identity(structural_runs):
    bad = 0
    for res, _ in structural_runs.values():
        bad += sum(r.total != r.d + r.rho + 1 for r in res.records)
    report(9, bad == 0, f"{bad} ledger entries differ from d + rho + 1")
    assert bad == 0


def test_criterion_10_bit_budget(structural_runs):
    over = 0
    for res, _ in structural_runs.values():
        for r in res.records:
            over += r.max_bits > bit_budget(r.dummies + res.summary["config"]["n"])
    maxima = {}
    for n in (16, 32, 64, 128, 256):
        cfg = SimConfig(n=n, a=3, seed=0, checks="sampled", check_rate=0.0,
                        abort_on_violation=False)
        maxima[n] = run_sequence(cfg, generate("uniform", n, 100, 0)).summary["max_message_bits"]
    jumps = [maxima[2 * n] - maxima[n] for n in (16, 32, 64, 128)]
    ok = over == 0 and max(jumps) <= 8
    report(10, ok, f"{over} messages over budget; max bits by n "
                   + ", ".join(f"{n}:{b}" for n, b in maxima.items())
                   + f"; largest doubling jump {max(jumps)}")
    assert over == 0
    assert max(jumps) <= 8


def test_criterion_11_worked_examples():
    g = CommunicationGraph()
    last = None
    for t, x, y in cluster_script():
        last = working_set_number(g, x, y, t, 7)
        g.record(x, y, t)
    checks = ten_node_checks()
    ok_a = last == 5
    ok_b = checks["zero_side"] and checks["timestamp_B_level2"]
    ok_c = checks["priorities"]
    report(11, ok_a and ok_b and ok_c,
           f"(a) working set {last}; (b) zero side {checks['zero_side']}, "
           f"B level-2 stamp {checks['timestamp_B_level2']}; (c) priorities {ok_c}")
    assert ok_a and ok_b and ok_c


def test_criterion_12_determinism(tmp_path):
    args = ["--nodes", "64", "--balance-a", "3", "--workload", "zipf", "--requests", "300",
            "--seed", "11", "--checks", "sampled:0.05", "--keep-going"]
    cli.main(args + ["--out", str(tmp_path / "one")])
    cli.main(args + ["--out", str(tmp_path / "two")])
    one = (tmp_path / "one.trace.csv").read_bytes()
    two = (tmp_path / "two.trace.csv").read_bytes()
    ok = one == two and len(one.splitlines()) == 301
    report(12, ok, f"two runs, {len(one)} trace bytes each, identical={one == two}")
    assert ok
