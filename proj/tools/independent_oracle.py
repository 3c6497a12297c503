#!/usr/bin/env python3
"""Brute-force minimum tracking set, written independently of the C++ code.

Reads instance files (the `p tracking` format) and prints, for each, the
number of simple s-t paths and the minimum tracking set size. The C++ test
fixtures were cross-checked against this script:

    python3 tools/independent_oracle.py instances/*.txt
"""

import itertools
import sys


def read_instance(path):
    n = s = t = None
    edges = []
    with open(path) as f:
        for line in f:
            parts = line.split()
            if not parts or parts[0] == "c":
                continue
            if parts[0] == "p":
                n = int(parts[2])
            elif parts[0] == "s":
                s = int(parts[1])
            elif parts[0] == "t":
                t = int(parts[1])
            elif parts[0] == "e":
                edges.append((int(parts[1]), int(parts[2])))
    adj = {v: set() for v in range(1, n + 1)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj, s, t


def simple_paths(adj, s, t):
    out = []
    stack = [(s, [s])]
    while stack:
        v, path = stack.pop()
        if v == t:
            out.append(tuple(path))
            continue
        for w in adj[v]:
            if w not in path:
                stack.append((w, path + [w]))
    return out


def min_tracking(adj, s, t):
    paths = simple_paths(adj, s, t)
    inner = [v for v in adj if v not in (s, t)]
    for r in range(len(inner) + 1):
        for subset in itertools.combinations(inner, r):
            chosen = set(subset)
            seqs = {tuple(v for v in p if v in chosen) for p in paths}
            if len(seqs) == len(paths):
                return len(paths), r, sorted(subset)
    raise AssertionError("unreachable")


def main(argv):
    for path in argv:
        adj, s, t = read_instance(path)
        count, size, witness = min_tracking(adj, s, t)
        print(f"{path}: paths={count} min={size} witness={witness}")


if __name__ == "__main__":
    main(sys.argv[1:])
