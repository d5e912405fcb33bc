"""
Largest simple-module dimensions
================================

Chop permutation modules, their duals and tensor products until the number of
absolutely simple modules matches the number of p-regular classes, then read
off the largest dimension m_s.
"""

from modsimple.builders import build
from modsimple.meataxe.simples import simple_census
from modsimple.permgrp import sylow

# SL(2, 2^n) in characteristic 2: dimensions 2^j, each with multiplicity C(n, j)
for q in (4, 8):
    G = build(f"sl2:{q}")
    census = simple_census(G, 2)
    print(f"SL(2,{q}) order {G.order}: dims {census.dims}")
    # how the search found them: (source, dimension, new simples)
    for source in census.sources:
        print("   ", source)

# %%
# Over GF(2) the two 2-dimensional simples of SL(2,4) appear fused into one
# 4-dimensional module whose endomorphism ring is GF(4); e = 2 splits it.
for S in simple_census(build("sl2:4"), 2).simples:
    print(f"ground-field dim {S.dim}, endomorphism degree e = {S.e}, absolute dim {S.abs_dim}")

# %%
# The affine wreath families reach m_s = |P| / p exactly.
for spec, p in [("fermat_example:3", 2), ("fermat_example:5", 2)]:
    G = build(spec)
    dims = simple_census(G, p).dims
    print(f"{spec}: |G| = {G.order}, |P| = {sylow(G, p).order}, m_s = {max(dims)}")
