"""Unit-map certificates for BS(1, n).

The abelianization of BS(1, n) is coessential exactly when -1 and the primes
dividing n generate all units mod n - 1.  When they do not, some normally
generating pair has infinite recalcitrance.
"""

from aclab.units import bs_coessential, bs_scan

c = bs_coessential(11)
print(f"BS(1,11): image {c.image} in (Z/10)^x of order {c.target_order}; {c.witness} is not hit")

bad = [cert.n for cert in bs_scan(2, 100) if not cert.surjective]
print(f"\nn in 2..100 with a non-surjective unit map ({len(bad)}):")
print(" ", bad)

print("\nprime powers:")
for n in (11, 13, 16, 25, 27, 32, 49, 81):
    cert = bs_coessential(n)
    note = f"  note: {cert.notes[0]}" if cert.notes else ""
    print(f"  n={n:3d}  image {len(cert.image):2d} of {cert.target_order:2d}  {cert.verdict}{note}")
