import json
from collections import Counter

import pytest

from dsg import cli
from dsg.workloads import cluster, generate, parse_replay, repeated_pair, uniform, zipf


def test_zero_requests():
    for kind in ("uniform", "zipf", "repeated_pair", "cluster"):
        assert generate(kind, 10, 0, 1) == []


def test_repeated_pair_certain():
    reqs = repeated_pair(30, 5, 4, p=1.0)
    assert len({(r.u, r.v) for r in reqs}) == 1
    assert [r.time for r in reqs] == [1, 2, 3, 4, 5]


def test_zipf_top_rank_frequency():
    n = 64
    reqs = zipf(n, 10_000, 7, s=1.2)
    counts = Counter()
    for r in reqs:
        counts[r.u] += 1
        counts[r.v] += 1
    top = counts[1] / (2 * len(reqs))
    assert top >= 3 * (1 / n)


def test_cluster_stays_mostly_inside():
    reqs = cluster(40, 2000, 3, k=4)
    # recover cliques from the generator's own shuffle
    import random
    rng = random.Random(3)
    ids = list(range(1, 41))
    rng.shuffle(ids)
    group = {x: i % 4 for i, x in enumerate(ids)}
    inside = sum(group[r.u] == group[r.v] for r in reqs)
    assert inside / len(reqs) > 0.9


def test_generators_are_pure():
    assert uniform(20, 50, 9) == uniform(20, 50, 9)
    assert uniform(20, 50, 9) != uniform(20, 50, 10)
    assert all(r.u != r.v for r in uniform(3, 500, 1))


@pytest.mark.parametrize("call", [lambda: uniform(1, 5, 0), lambda: zipf(10, 5, 0, s=0),
                                  lambda: repeated_pair(10, 5, 0, p=1.5),
                                  lambda: cluster(10, 5, 0, k=6), lambda: uniform(5, -1, 0)])
def test_generator_errors(call):
    with pytest.raises(ValueError):
        call()


def test_replay_format():
    reqs = parse_replay(["# header", "1 3 4", "", "5 4 3  # again"])
    assert [(r.time, r.u, r.v) for r in reqs] == [(1, 3, 4), (5, 4, 3)]
    with pytest.raises(ValueError):
        parse_replay(["2 1 2", "2 1 3"])
    with pytest.raises(ValueError):
        parse_replay(["1 2"])


def test_tiny_run(tmp_path):
    out = tmp_path / "tiny"
    code = cli.main(["--nodes", "4", "--requests", "10", "--out", str(out)])
    assert code == 0
    for suffix in ("trace.csv", "summary.json", "topology.json"):
        assert (tmp_path / f"tiny.{suffix}").exists()


def test_scenario_replay(tmp_path):
    out = tmp_path / "ten"
    assert cli.main(["--scenario", "ten-node", "--out", str(out)]) == 0
    summary = json.loads((tmp_path / "ten.summary.json").read_text())
    assert summary["scenario_match"] is True


def test_two_runs_same_digest(tmp_path):
    args = ["--nodes", "20", "--requests", "40", "--workload", "zipf", "--seed", "3",
            "--keep-going"]
    cli.main(args + ["--out", str(tmp_path / "a")])
    cli.main(args + ["--out", str(tmp_path / "b")])
    a = json.loads((tmp_path / "a.summary.json").read_text())
    b = json.loads((tmp_path / "b.summary.json").read_text())
    assert a["trace_digest"] == b["trace_digest"]
    assert (tmp_path / "a.trace.csv").read_bytes() == (tmp_path / "b.trace.csv").read_bytes()


def test_config_file_with_override(tmp_path):
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({"n": 12, "requests": 7, "seed": 1}))
    args = cli.build_parser().parse_args(["--config", str(cfg), "--requests", "3"])
    rc = cli.config_from_args(args)
    assert (rc.n, rc.requests, rc.seed) == (12, 3, 1)


def test_config_file_unknown_key(tmp_path):
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({"nodes": 12}))
    with pytest.raises(SystemExit):
        cli.main(["--config", str(cfg)])


def test_sampled_checks_flag():
    args = cli.build_parser().parse_args(["--checks", "sampled:0.25"])
    rc = cli.config_from_args(args)
    assert rc.checks == "sampled" and rc.check_rate == 0.25


def test_replay_flag(tmp_path):
    f = tmp_path / "r.txt"
    f.write_text("1 1 2\n2 3 4\n3 2 1\n")
    out = tmp_path / "rep"
    assert cli.main(["--nodes", "6", "--replay", str(f), "--out", str(out)]) == 0
    rows = (tmp_path / "rep.trace.csv").read_text().splitlines()
    assert len(rows) == 4


def test_violations_give_nonzero_exit(tmp_path):
    # 48 nodes already exceed the dummy budget after a few requests
    code = cli.main(["--nodes", "48", "--requests", "5", "--keep-going",
                     "--out", str(tmp_path / "v")])
    summary = json.loads((tmp_path / "v.summary.json").read_text())
    assert summary["violations"] > 0
    assert code == 1


def test_diverging_repair_is_reported(tmp_path):
    code = cli.main(["--nodes", "48", "--balance-a", "2", "--requests", "3", "--keep-going",
                     "--out", str(tmp_path / "d")])
    summary = json.loads((tmp_path / "d.summary.json").read_text())
    assert "repair_diverged" in summary["violation_kinds"]
    assert "aborted" in summary
    assert code == 1


@pytest.mark.parametrize("bad", [["--nodes", "1"], ["--balance-a", "1"], ["--requests", "-2"],
                                 ["--zipf-s", "0"]])
def test_invalid_config(bad):
    with pytest.raises(SystemExit):
        cli.main(bad)
