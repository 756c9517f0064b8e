#!/usr/bin/env python3
"""Generate the graph6 corpora under tests/data.

Connected graphs are grown one vertex at a time from the previous order and
deduplicated by nauty canonical certificate (pynauty). Every connected graph on
n+1 vertices has a vertex whose removal leaves it connected, so augmenting the
connected graphs on n vertices reaches every class.

Usage: make_corpus.py OUT_DIR [--max-connected 8] [--max-tree 9]
"""

import argparse
import itertools
import pathlib

import networkx as nx
import pynauty


def certificate(g: nx.Graph) -> bytes:
    n = g.number_of_nodes()
    adj = {v: [u for u in g.neighbors(v)] for v in g.nodes}
    return pynauty.certificate(pynauty.Graph(n, adjacency_dict=adj))


def canonical(g: nx.Graph) -> nx.Graph:
    n = g.number_of_nodes()
    adj = {v: [u for u in g.neighbors(v)] for v in g.nodes}
    lab = pynauty.canon_label(pynauty.Graph(n, adjacency_dict=adj))
    relabel = {old: new for new, old in enumerate(lab)}
    return nx.relabel_nodes(g, relabel)


def grow(prev: list[nx.Graph], n: int, trees_only: bool) -> list[nx.Graph]:
    seen: dict[bytes, nx.Graph] = {}
    for g in prev:
        if trees_only:
            choices = [(v,) for v in range(n - 1)]
        else:
            choices = [c for k in range(1, n) for c in itertools.combinations(range(n - 1), k)]
        for nbrs in choices:
            h = g.copy()
            h.add_node(n - 1)
            h.add_edges_from((n - 1, u) for u in nbrs)
            cert = certificate(h)
            if cert not in seen:
                seen[cert] = canonical(h)
    return sorted(seen.values(), key=lambda h: (h.number_of_edges(), graph6(h)))


def graph6(g: nx.Graph) -> str:
    return nx.to_graph6_bytes(g, header=False).decode().strip()


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("out_dir", type=pathlib.Path)
    ap.add_argument("--max-connected", type=int, default=8)
    ap.add_argument("--max-tree", type=int, default=9)
    args = ap.parse_args()
    args.out_dir.mkdir(parents=True, exist_ok=True)

    for name, limit, trees_only in (("connected", args.max_connected, False),
                                    ("trees", args.max_tree, True)):
        level = [nx.empty_graph(1)]
        for n in range(1, limit + 1):
            if n > 1:
                level = grow(level, n, trees_only)
            path = args.out_dir / f"{name}_n{n}.g6"
            path.write_text("".join(graph6(g) + "\n" for g in level))
            print(f"{path}: {len(level)} graphs")


if __name__ == "__main__":
    main()
