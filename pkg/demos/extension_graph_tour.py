#!/usr/bin/env python3
"""Tour of the extension graph.

Serre weights for GL2(F_q) sit on an integer lattice once a base weight mu
is fixed: each lattice point maps to an irreducible class, distinct points
map to distinct classes, and two classes admit a nontrivial extension
exactly when their points differ by one step along a coordinate axis.
"""

from swlab import (
    LambdaWElement,
    Params,
    Weight,
    enumerate_graph,
    ext1_dim,
    t_mu,
    t_mu_raw,
)
from swlab.graph import graph_dot

params = Params(7, 1)
mu = Weight(((4, 0),))

print("Base weight mu =", mu.coords, "over p =", params.p, ", f =", params.f)
print()

# walk the three closest points by hand
for c in (-1, 0, 1):
    point = LambdaWElement((c,))
    raw = t_mu_raw(params, mu, point)
    cls = t_mu(params, mu, point)
    print(f"  point {c:+d}: raw image {raw.coords} -> class r={cls.r}, d={cls.d}")
print()

# the predictor: adjacent points carry a one-dimensional extension space
pairs = [((0,), (1,)), ((-1,), (1,)), ((0,), (0,))]
for a, b in pairs:
    dim = ext1_dim(params, mu, LambdaWElement(a), LambdaWElement(b))
    print(f"  ext between points {a} and {b}: {dim}")
print()

# a whole neighbourhood at once, rendered for graphviz
enum = enumerate_graph(params, mu, radius=2)
print(f"radius-2 neighbourhood: {len(enum.vertices)} vertices, {len(enum.edges)} edges")
print()
print(graph_dot(enum))
