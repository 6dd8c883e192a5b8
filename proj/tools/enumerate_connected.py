# Copyright 2026 The treelike Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Writes every connected graph on n vertices, one graph6 line each.

Graphs on n vertices are grown from those on n - 1 vertices by adding a
vertex joined to a nonempty subset of the old ones, then deduplicated by
nauty canonical certificate.

    python3 tools/enumerate_connected.py --max-n 8 --out tests/data
"""

import argparse
import pathlib

import networkx as nx
import pynauty


def certificate(g):
    n = g.number_of_nodes()
    adj = {v: list(g.neighbors(v)) for v in g.nodes()}
    return pynauty.certificate(pynauty.Graph(n, adjacency_dict=adj))


def canonical(g):
    n = g.number_of_nodes()
    adj = {v: list(g.neighbors(v)) for v in g.nodes()}
    order = pynauty.canon_label(pynauty.Graph(n, adjacency_dict=adj))
    pos = {v: i for i, v in enumerate(order)}
    return nx.relabel_nodes(g, pos)


def grow(graphs, n):
    seen = {}
    for g in graphs:
        for mask in range(1, 1 << (n - 1)):
            h = g.copy()
            h.add_node(n - 1)
            h.add_edges_from((n - 1, v) for v in range(n - 1) if mask >> v & 1)
            seen.setdefault(certificate(h), h)
    return [canonical(h) for _, h in sorted(seen.items())]


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-n", type=int, default=8)
    parser.add_argument("--out", type=pathlib.Path, default=pathlib.Path("tests/data"))
    args = parser.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    level = [nx.empty_graph(1)]
    for n in range(1, args.max_n + 1):
        if n > 1:
            level = grow(level, n)
        lines = [nx.to_graph6_bytes(g, header=False).decode().strip() for g in level]
        (args.out / f"connected{n}.g6").write_text("\n".join(lines) + "\n")
        print(f"n={n}: {len(level)} graphs")


if __name__ == "__main__":
    main()
