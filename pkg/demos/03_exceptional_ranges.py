"""Exceptional cofactors for a single prime power.

For r = m p^a with gcd(m, p) = 1 the per-prime inequality can fail only for
small m. The threshold on m is certified, then the finite exceptional set is
listed and the composite bound is swept over it.
"""

from fractions import Fraction

from sgcert.corollary import load_manifest, sweep
from sgcert.lemmas import exception_set, threshold_cofactor

for p, a in [(23, 1), (19, 1), (7, 2), (5, 2), (5, 3), (3, 4), (3, 5), (3, 6), (3, 7), (3, 8)]:
    rep = threshold_cofactor(p, a)
    print(f"p={p:>2}, a={a}: {rep.status.value:<13} largest exceptional m = {rep.max_m}")

print("exceptional m for 3^6:", exception_set(3, 6, cap=10).members)

cert = sweep(load_manifest())
d = cert.detail
print(f"sweep: {d['count']} values, outcome {cert.outcome.value}, "
      f"max f/B near {float(Fraction(d['max_ratio']['hi'])):.6f} at r = {d['argmax_r']} = {d['argmax_factorization']}")
