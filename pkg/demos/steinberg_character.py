"""
Chains of p-subgroups and the Steinberg character
=================================================

Enumerate chain orbits in three complexes, form the alternating sum of
permutation characters on the chain stabilizers, and look for groups with
O_p(G) = 1 whose character is zero.
"""

from modsimple.builders import build
from modsimple.corpus import bundled_corpus_path, load_corpus, search_steinberg_zero
from modsimple.pcomplex import KINDS, chain_census_csv, chain_orbits, reduced_euler_characteristic, steinberg_character

G = build("sym:3")
print(chain_census_csv(chain_orbits(G, 2), "poset"))
ch = steinberg_character(G, 2)
for c, v in zip(ch.class_reps, ch.values):
    print(f"class of {c.representative} (order {c.element_order}, size {c.size}): {v}")

# %%
# The three complexes give the same character even though they have
# different numbers of chains.
G = build("sym:4")
for kind in KINDS:
    n = sum(o.orbit_size for o in chain_orbits(G, 3, kind))
    print(f"{kind:>20}: {n} chains, chi~ = {reduced_euler_characteristic(G, 3, kind)}, "
          f"values {steinberg_character(G, 3, kind).values}")

# %%
# A normal 2-subgroup kills the character.
print("S4 at 2:", steinberg_character(G, 2).values)

# %%
print(search_steinberg_zero(load_corpus(bundled_corpus_path()), 2))
