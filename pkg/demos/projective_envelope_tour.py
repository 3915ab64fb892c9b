#!/usr/bin/env python3
"""The filtration model of a generic projective envelope.

The projective cover of a generic irreducible is a tensor product of
three-step pieces, so its graded structure is indexed by {0,1,2}^f and its
4^f constituents are labelled by subsets of the signed set {+-omega^(i)}.
This walks the layers, the dimension bookkeeping, and the submodule
lattice.
"""

from swlab import Params, Weight, dim_serre
from swlab.envelope import (
    all_jsets,
    graded_pieces,
    hom_dim,
    v_submodule,
    vbar_layers,
)
from swlab.lattice import serre_class, eta

params = Params(7, 1)
mu = Weight(((4, 0),))

rep = graded_pieces(params, mu)
print(f"graded pieces over mu = {mu.coords}  (total dim {sum(rep.dims.values())} = 2p)")
for k, entries in rep.by_index.items():
    names = ", ".join(f"r={c.r} d={c.d} (dim {dim_serre(c)})" for _, c in entries)
    print(f"  layer {k.k}: {names}")
print()

# each constituent generates a submodule; containment reverses label inclusion
print("submodule lattice (labels are subsets of {+w, -w}):")
for J in all_jsets(1):
    sub = v_submodule(params, mu, J)
    tag = f"plus={J.plus:01b} minus={J.minus:01b}"
    print(f"  V[{tag}] has {len(sub.jh)} constituents")
print()

# the two-layer piece over each generator
base = all_jsets(1)[0]
layers = vbar_layers(params, mu, base)
print("generator at the empty label extends into:", [c.d for _, c in layers.layer1])

# multiplicity of the base class among all labels
count, labels = hom_dim(params, mu, serre_class(params, mu - eta(1)))
print(f"the base class occurs {count} times, at labels {[ (J.plus, J.minus) for J in labels ]}")

# a two-coordinate example: 16 constituents of total dimension (2p)^2
params2 = Params(5, 2)
rep2 = graded_pieces(params2, Weight(((3, 0), (2, 0))))
print()
print(
    f"f = 2: {sum(len(v) for v in rep2.by_index.values())} constituents,",
    f"total dim {sum(rep2.dims.values())}",
)
