"""Subspaces of GF(q^n) from the text notation, shifts and stabilizers."""

from orbitcodes.dsl import format_subspace, parse_subspace
from orbitcodes.gf import tower_for
from orbitcodes.subspace import shift, stabilizer

t = tower_for(2, 14)
u = parse_subspace("z^11*F(2,2) + z^13*F(2,2) + z^14*F(2,2)", t)
print("U =", format_subspace(u))
print("dim U =", u.k)

st = stabilizer(u, verify=True)
print(f"Stab(U) = GF(2^{st.t})^*, so Orb(U) has {st.orbit_size} members")

g = t.subfield_generator(2)
print("z^5461 U == U ?", shift(g, u) == u)
print("z U == U ?", shift(t.z, u) == u)

# sums, intersections and membership
v = shift(t.power_of_z(3), u)
print("\ndim(U + z^3 U) =", (u + v).k, "  dim(U & z^3 U) =", (u & v).k)
print("z^11 in U ?", t.power_of_z(11) in u)

# products and powers are allowed inside element expressions
t12 = tower_for(3, 12)
w = parse_subspace("z^6643*(z^2+1)*F(3,2) + z^13286*(z^2+1)*F(3,2) + (z^3+z+1)*F(3,2)", t12)
print("\nq=3, n=12 subspace has dimension", w.k, "and stabilizer exponent", stabilizer(w).t)
