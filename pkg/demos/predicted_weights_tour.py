#!/usr/bin/env python3
"""Predicted weight sets of tame parameters.

A tame parameter is a pair (w, mu).  Its predicted weight set is a signed
hypercube in the extension graph: 2^f classes, one per subset of the
coordinates, signed by w.  At f = 1 these are the classical companion
pairs, and each weight in the set gives an equivalent recentred
presentation of the same parameter.
"""

from swlab import Params, TameParam, Weight, WeylElement, w_question
from swlab.lattice import weight_to_str, weyl_to_str
from swlab.weights import jh_dl_reduction, presentations

params = Params(7, 1)
mu = Weight(((4, 0),))

for flags, label in (((False,), "split"), ((True,), "non-split")):
    t = TameParam(WeylElement(flags), mu, params)
    print(f"w = {weyl_to_str(t.w)} ({label} shape), mu = {weight_to_str(mu)}")
    for cls in w_question(t):
        print(f"  predicted weight: Sym^{cls.r[0]} twisted by det^{cls.d}")
    print("  reduction constituents:", [(c.r[0], c.d) for c in jh_dl_reduction(t)])
    print()

# recentred presentations: every predicted weight works as a new base point
t = TameParam(WeylElement((True,)), mu, params)
print("presentations of the non-split parameter:")
for pres in presentations(t):
    print(
        f"  label {pres.label:#03b}: lambda = {weight_to_str(pres.lam)},"
        f" w = {weyl_to_str(pres.w_sigma)}, cosocle r={pres.sigma.r}, d={pres.sigma.d}"
    )

# an f = 2 parameter: four predicted weights
params2 = Params(5, 2)
t2 = TameParam(WeylElement((False, True)), Weight(((2, 0), (3, 0))), params2)
print()
print("f = 2 example:", [(list(c.r), c.d) for c in w_question(t2)])
