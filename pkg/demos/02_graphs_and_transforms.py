#!/usr/bin/env python3
"""Graphs as metric spaces, plus the two deformations.

The gravitational deformation caps every distance at 2t: points outside that
horizon are pulled onto it, nothing inside moves. The squash transform
d -> eta*d/(eta+d) bounds the space below eta while preserving every
comparison between distances, so it never changes which sets resolve.
"""

import numpy as np

from lexmetric import (
    Graph,
    diameter,
    graph_metric,
    gravitational,
    parse_edge_list,
    path_graph,
    squash,
    validate,
)

print("=" * 64)
print("1. Shortest-path metrics")
print("=" * 64)

p4 = graph_metric(path_graph(4))
print("P4 distances:")
print(np.asarray(p4.dist))

weighted = Graph(("a", "b", "c"), (("a", "b", 1.0), ("b", "c", 2.0), ("a", "c", 5.0)))
wm = graph_metric(weighted)
print("\nweighted triangle (the 5-edge is never used):")
print(np.asarray(wm.dist))

edge_text = """# a weighted kite
a b
b c
c d 0.5
a c
"""
kite = graph_metric(parse_edge_list(edge_text))
print("\nparsed from an edge list:", kite.points, "diameter", diameter(kite))

print("\n" + "=" * 64)
print("2. Gravitational deformation: cap at 2t")
print("=" * 64)

for t in (1.5, 1.0, 0.6):
    capped = gravitational(p4, t)
    print(f"t = {t}: d(a,d) {p4.d('a', 'd'):g} -> {capped.d('a', 'd'):g}; "
          f"still a metric: {validate(capped).ok}")
print("capping twice with the same t changes nothing (idempotent):",
      np.array_equal(gravitational(gravitational(p4, 0.6), 0.6).dist,
                     gravitational(p4, 0.6).dist))

print("\n" + "=" * 64)
print("3. Squash: bounded, order-preserving")
print("=" * 64)

bounded = squash(1.0, p4)
print("distances 1, 2, 3 become", [f"{bounded.d('a', x):g}" for x in ("b", "c", "d")])
print(f"diameter {diameter(bounded):g} stays below eta = 1")
print("every comparison is preserved, e.g. d(a,b) < d(a,c):",
      p4.d("a", "b") < p4.d("a", "c"), "->",
      bounded.d("a", "b") < bounded.d("a", "c"))
