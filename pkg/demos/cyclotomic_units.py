"""Cyclotomic units 1 + x + ... + x^(a-1) modulo Phi_n for prime powers n."""

from math import gcd

from aclab.units import cyclotomic_poly, phi_at_1, xi_unit_check

for n in (5, 8, 9, 12):
    print(f"Phi_{n} = {cyclotomic_poly(n)}   Phi_{n}(1) = {phi_at_1(n)}")

print()
for n in (9, 25, 27):
    norms = {a: xi_unit_check(n, a).resultant for a in range(1, n) if gcd(a, n) == 1}
    print(f"n={n}: norms of xi_a are {sorted(set(norms.values()))} over {len(norms)} values of a")
