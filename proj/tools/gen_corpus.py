#!/usr/bin/env python3
"""Write every connected graph with at most N vertices (default 6), one graph6
file per vertex count, from the networkx graph atlas."""

import argparse
import pathlib

import networkx as nx


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("out", type=pathlib.Path, help="output directory")
    parser.add_argument("--max-n", type=int, default=6, help="largest vertex count (atlas covers up to 7)")
    args = parser.parse_args()
    if not 1 <= args.max_n <= 7:
        parser.error("--max-n must be in 1..7")

    args.out.mkdir(parents=True, exist_ok=True)
    by_n: dict[int, list[str]] = {}
    for g in nx.graph_atlas_g():
        n = g.number_of_nodes()
        if n == 0 or n > args.max_n or not nx.is_connected(g):
            continue
        by_n.setdefault(n, []).append(nx.to_graph6_bytes(g, header=False).decode().strip())
    for n, lines in sorted(by_n.items()):
        (args.out / f"connected-n{n}.g6").write_text("\n".join(lines) + "\n")
        print(f"n={n}: {len(lines)} graphs")


if __name__ == "__main__":
    main()
