"""The per-prime bound S(p, a) and the constants behind it.

S(p, a) sums Gaussian binomials [a, k]_p and counts the subgroups of the
elementary abelian group of order p^a. For large a it is replaced by the
smooth upper bound c(p) p^(a^2/4).
"""

from sgcert.sgbound import S, C_enclosure, bound_B, c_enclosure, f_of_r, gaussian_binomial, subgroup_sum

print("[6, k]_2 for k = 0..6:", [gaussian_binomial(6, k, 2) for k in range(7)])
print("S(2, 6) exact sum:", subgroup_sum(6, 2))
print("S(2, 6) as used by the bound (upper endpoint):", float(S(2, 6).upper))

for p in (2, 3):
    C, c = C_enclosure(p).interval, c_enclosure(p).interval
    print(f"C({p}) in [{float(C.lo):.12f}, {float(C.hi):.12f}]   c({p}) in [{float(c.lo):.12f}, {float(c.hi):.12f}]")

for r in (12, 360, 43890):
    f = f_of_r(r)
    B = bound_B(r)
    print(f"r = {r:>6}: f(r) = {f}, B(r) ~ {float(B.mid):.4g}, ratio ~ {float(f / B.mid):.4f}")
