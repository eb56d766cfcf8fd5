"""Field towers GF(p) < GF(q) < GF(q^n) on Conway moduli."""

from orbitcodes.gf import format_polynomial, tower_for

t = tower_for(3, 10)
print("GF(3^10) is built on", format_polynomial(t.modulus))
print("z has multiplicative order", t.multiplicative_order(t.z), "=", t.order - 1)

# every subfield GF(3^s), s | 10, is generated by a power of z
for s in (1, 2, 5, 10):
    g = t.subfield_generator(s)
    print(f"GF(3^{s}) is generated by z^{t.subfield_exponent(s)}, degree over GF(3) = {t.degree_over(g)}")

x = t.power_of_z(7381)
print("\nx = z^7381 =", x)
print("x^9 == x ?", t.pow(x, 9) == x, "  x^3 == x ?", t.pow(x, 3) == x)

# F_q-coordinates: elements are vectors over GF(q) w.r.t. 1, z, ..., z^(n-1)
a = t.add(t.power_of_z(12), t.one)
print("\nz^12 + 1 =", a, "  coordinates", t.to_fq_coords(a))

# composite q: GF(4) inside GF(4^3) = GF(2^6)
t4 = tower_for(4, 3)
print("\nq = 4, n = 3: p =", t4.p, "e =", t4.e, "modulus", format_polynomial(t4.modulus))
for code in range(4):
    print(f"  GF(4) code {code} ->", t4.fq_element(code))
