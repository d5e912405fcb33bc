"""
Structural lower bounds and regular orbits
==========================================

Compare m_s with the two lower bounds built from the layer X of p-divisible
components, and count regular orbits of Sylow subgroups of GL(n, q).
"""

from modsimple.builders import build
from modsimple.theorem1 import count_regular_orbits, sylow_glnq, verify_theorem1

for spec, p in [("frobenius:11,5", 5), ("alt:5", 5), ("direct:[alt:5],[frobenius:11,5]", 5),
                ("alt:5", 2), ("fermat_example:3", 2), ("sl2:8", 3)]:
    rep = verify_theorem1(build(spec), p)
    print(f"{spec} at {p}: |X| = {rep.x_order}, bound_i = {rep.bound_i}, bound_ii = {rep.bound_ii}, "
          f"m_s = {rep.m_s} -> {rep.outcome}")

# %%
# Odd primes other than Mersenne primes leave at least two regular orbits;
# the Mersenne prime 3 on GF(2)^2 leaves just one.
for n, q, p in [(4, 2, 5), (2, 2, 3), (4, 3, 5), (2, 5, 3), (3, 2, 7)]:
    print(f"Sylow {p} of GL({n},{q}): {count_regular_orbits(sylow_glnq(n, q, p))} regular orbits")
