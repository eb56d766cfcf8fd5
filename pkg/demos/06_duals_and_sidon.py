"""Trace duals share the distance distribution; Sidon spaces have distance 2k - 2."""

import numpy as np

from orbitcodes.gf import tower_for
from orbitcodes.orbit import distance_distribution, intersection_distribution, is_sidon, is_sidon_by_definition, trace_dual
from orbitcodes.subspace import span

t = tower_for(2, 6)
rng = np.random.default_rng(4)
u = span([t.power_of_z(int(j)) for j in rng.integers(0, t.group_order, 2)])
ud = trace_dual(u)
print("U has dimension", u.k, "and its trace dual dimension", ud.k)
print("distances of Orb(U):      ", distance_distribution(intersection_distribution(u)).nontrivial())
print("distances of Orb(U^perp): ", distance_distribution(intersection_distribution(ud)).nontrivial())

sidon = 0
total = 0
for j in range(1, t.group_order):
    v = span([t.one, t.power_of_z(j)])
    if v.k < 2:
        continue
    total += 1
    a = is_sidon(v)
    assert a == is_sidon_by_definition(v)
    sidon += a
print(f"\n{sidon} of the {total} spaces <1, z^j> in GF(2^6) are Sidon spaces")
