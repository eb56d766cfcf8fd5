"""Intersection and distance distributions of orbit codes."""

from orbitcodes.dsl import parse_subspace
from orbitcodes.gf import tower_for
from orbitcodes.orbit import distance_distribution, intersection_distribution, pair_counts

t = tower_for(3, 11)
u = parse_subspace("span(z^13, z^17, z^21, z^23)", t)
d = intersection_distribution(u)
print("q=3, n=11, U = <z^13, z^17, z^21, z^23>")
print("orbit size", d.orbit_size, " lambda =", d.lambdas)
print("sum of lambda =", sum(d.lambdas), "= orbit size - 1")

dd = distance_distribution(d)
print("\n d   delta_d   ordered pairs")
pairs = pair_counts(d)
for dist, count in dd.delta.items():
    print(f"{dist:2d}  {count:8d}  {pairs[dist]:14d}")
print("minimum distance", dd.min_distance)

# a degenerate orbit: every nonzero lambda_i sits at an index divisible by t
t = tower_for(2, 14)
u = parse_subspace("z^11*F(2,2) + z^13*F(2,2) + z^14*F(2,2)", t)
d = intersection_distribution(u, threads=1)
print("\nq=2, n=14: t =", d.t, " lambda =", d.lambdas)
print("nonzero entries are multiples of 2^2(2^2+1) = 20:", all(c % 20 == 0 for c in d.lambdas))
