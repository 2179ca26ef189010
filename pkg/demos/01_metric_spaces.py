#!/usr/bin/env python3
"""Tour of the basic objects: spaces, validation, nearness/slack/diameter, balls.

A space is just labeled points plus a square distance table. Every equality
decision (twin detection, resolving checks, validation) happens at the
space's absolute tolerance, 1e-9 by default.
"""

import numpy as np

from lexmetric import (
    FiniteMetricSpace,
    ball,
    space_stats,
    space_to_json,
    validate,
)

print("=" * 64)
print("1. A hand-built space: four points on the real line")
print("=" * 64)

values = [2.5, 3.0, 10 / 3, 3.5]
labels = ["u1", "u2", "u3", "u4"]
table = [[abs(x - y) for y in values] for x in values]
line = FiniteMetricSpace(tuple(labels), table)
print("points:", line.points)
print("table:")
print(np.array_str(np.asarray(line.dist), precision=4))

report = validate(line)
print("valid metric:", report.ok)

stats = space_stats(line)
print("\nper-point nearness:")
for p, v in stats.nearness_per_point.items():
    print(f"  {p}: {v:.4f}")
print(f"nearness (min) = {stats.nearness:.4f}")
print(f"slack    (max) = {stats.slack:.4f}")
print(f"diameter       = {stats.diameter:.4f}")

print("\n" + "=" * 64)
print("2. Validation catches every broken axiom, not just the first")
print("=" * 64)

broken = FiniteMetricSpace(("0", "1", "5"), [[0, 1, 10], [1, 0, 4], [10, 4, 0]])
for v in validate(broken).violations:
    print(f"  {v.axiom} at {v.where}: {v.lhs:g} vs {v.rhs:g}")
print("(stretching d(0,5) to 10 violates the triangle through 1: 10 > 1 + 4)")

print("\n" + "=" * 64)
print("3. Open balls")
print("=" * 64)

p3 = FiniteMetricSpace(("a", "b", "c"), [[0, 1, 2], [1, 0, 1], [2, 1, 0]])
print("space: path a - b - c")
print("ball(b, 1.5) =", sorted(ball(p3, "b", 1.5)))
print("ball(a, 1.0) =", sorted(ball(p3, "a", 1.0)), "(open: distance exactly 1 is out)")

print("\n" + "=" * 64)
print("4. JSON form, as used by the CLI")
print("=" * 64)
print(space_to_json(p3))
