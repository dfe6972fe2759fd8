#!/usr/bin/env python3
"""Replay the hand-checked scenarios and print each check."""

from dsg.oracle import CommunicationGraph, working_set_number
from dsg.routing import route
from dsg.scripted import A_, M_, cluster_script, six_node_state, ten_node_checks


def main() -> None:
    g = CommunicationGraph()
    numbers = []
    for t, x, y in cluster_script():
        numbers.append(working_set_number(g, x, y, t, 7))
        g.record(x, y, t)
    print("cluster script working-set numbers:", numbers)

    t = six_node_state()
    print("six-node route A -> M:", route(t, A_, M_).hops)

    for name, ok in ten_node_checks().items():
        print(f"ten-node {name}: {'ok' if ok else 'MISMATCH'}")


if __name__ == "__main__":
    main()
