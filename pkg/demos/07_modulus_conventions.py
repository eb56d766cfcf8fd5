"""Exact lambda values depend on the modulus; the divisibility laws do not."""

from orbitcodes.dsl import parse_element
from orbitcodes.gf import format_polynomial, tower_for
from orbitcodes.golden import get_example, reproduce_example

ex = get_example("q3n10")
for modulus in (None, [2, 2, 2, 2, 2, 0, 0, 0, 1, 2, 1]):
    r = reproduce_example(ex, modulus=modulus)
    print(format_polynomial(r.modulus), "(Conway)" if r.conway else "")
    print("   lambda", r.computed.lambdas, " recorded match:", r.matches)
    print("   sum rule:", r.sum_rule_ok, " divisibility:", r.divisibility_ok)

# the q=3, n=12 record needs an element of GF(3^4) \ GF(3^2)
t = tower_for(3, 12)
printed = parse_element("2*z^10 + 2*z^9 + 2*z^7 + z^6 + z^4 + 2*z^3 + z + 2", t)
print("\nprinted polynomial has degree", t.degree_over(printed), "over GF(3) on the Conway modulus")
print("z^6643 has degree", t.degree_over(t.power_of_z(6643)))
r = reproduce_example(get_example("q3n12"))
print("with a = z^6643: lambda", r.computed.lambdas, "match:", r.matches)
