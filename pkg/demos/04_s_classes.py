"""S-classes: the orbit members that share an intersection dimension come in blocks."""

from orbitcodes.dsl import parse_subspace
from orbitcodes.gf import tower_for
from orbitcodes.orbit import intersection_distribution, s_class, s_partition

t = tower_for(3, 10)
u = parse_subspace("z^1708*F(3,2) + z^732*F(3,2) + z^91*F(3)", t)
d = intersection_distribution(u)
print("q=3, n=10, lambda =", d.lambdas)

for i in (2, 4):
    classes = s_partition(u, i)
    sizes = [len(c) for c in classes]
    print(f"O_{i}: {d.lambdas[i]} members in {len(classes)} classes of sizes {sorted(set(sizes))}")

# the class of a degree-2 element has q members, any other has q(q+1)
beta = t.subfield_generator(2)
print("\n|S| for alpha of degree 2:", len(s_class(beta, u)))
print("|S| for alpha = z:", len(s_class(t.z, u)))
