#!/usr/bin/env python3
"""Regenerates connected_graphs_n7.txt from the networkx graph atlas.

Every connected graph on 1..7 nodes, one per line:
    n e u1 v1 u2 v2 ...
"""
import networkx as nx

with open("connected_graphs_n7.txt", "w") as out:
    out.write("# connected graphs on 1..7 nodes, one per line: n e u1 v1 u2 v2 ...\n")
    count = 0
    for g in nx.graph_atlas_g():
        n = g.number_of_nodes()
        if n == 0 or n > 7 or not nx.is_connected(g):
            continue
        parts = [str(n), str(g.number_of_edges())]
        for u, v in sorted(tuple(sorted(e)) for e in g.edges()):
            parts.append(str(u))
            parts.append(str(v))
        out.write(" ".join(parts) + "\n")
        count += 1
print(count, "graphs")
