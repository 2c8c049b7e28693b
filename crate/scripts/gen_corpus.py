#!/usr/bin/env python3
"""Regenerate the graph6 corpus files under corpus/.

Graphs are listed up to isomorphism. Orders 1..7 come from the networkx
graph atlas; order 8 is built by extending every order-7 graph with one
new vertex and deduplicating by isomorphism. Trees come from
networkx.nonisomorphic_trees.
"""
import sys
from collections import defaultdict
from itertools import combinations
from pathlib import Path

import networkx as nx

OUT = Path(__file__).resolve().parent.parent / "corpus"

# OEIS A000088 / A001349 / A000055
ALL_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346}
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}
TREE_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 11, 8: 23, 9: 47}


def g6(g):
    return nx.to_graph6_bytes(g, header=False).decode().strip()


def atlas_by_order():
    by = defaultdict(list)
    for g in nx.graph_atlas_g():
        if g.number_of_nodes() >= 1:
            by[g.number_of_nodes()].append(g)
    return by


def extend(graphs, n):
    buckets = defaultdict(list)
    for base in graphs:
        for k in range(n + 1):
            for nbrs in combinations(range(n), k):
                g = base.copy()
                g.add_node(n)
                g.add_edges_from((n, u) for u in nbrs)
                key = (tuple(sorted(d for _, d in g.degree())),
                       nx.weisfeiler_lehman_graph_hash(g, iterations=3))
                bucket = buckets[key]
                if not any(nx.is_isomorphic(g, h) for h in bucket):
                    bucket.append(g)
    return [g for b in buckets.values() for g in b]


def write(name, graphs):
    path = OUT / name
    path.write_text("".join(g6(g) + "\n" for g in graphs))
    print(f"{name}: {len(graphs)}", file=sys.stderr)


def main():
    OUT.mkdir(exist_ok=True)
    by = atlas_by_order()
    by[8] = extend(by[7], 7)
    for n, count in ALL_COUNTS.items():
        assert len(by[n]) == count, (n, len(by[n]))

    all_upto_8 = [g for n in range(1, 9) for g in by[n]]
    write("all_n1-8.g6", all_upto_8)
    write("all_n2-4.g6", [g for n in range(2, 5) for g in by[n]])

    conn = [g for n in range(2, 6) for g in by[n] if nx.is_connected(g)]
    for n in range(2, 6):
        assert sum(1 for g in conn if g.number_of_nodes() == n) == CONNECTED_COUNTS[n]
    write("connected_n2-5.g6", conn)

    trees = []
    for n in range(1, 10):
        ts = [nx.empty_graph(1)] if n == 1 else list(nx.nonisomorphic_trees(n))
        assert len(ts) == TREE_COUNTS[n], (n, len(ts))
        trees.extend(ts)
    write("trees_n1-9.g6", trees)


if __name__ == "__main__":
    main()
