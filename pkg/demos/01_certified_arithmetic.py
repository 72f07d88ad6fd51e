"""Certified comparisons with exact rational intervals.

Every quantity is an expression tree evaluated to a pair of rationals that
provably bracket the true value. A comparison is decided only when the two
brackets separate; otherwise the working precision doubles.
"""

from fractions import Fraction

from sgcert.certified import Const, Log2, Power, Product, Sum, certified_compare, log2_enclosure

# log2(19) bracketed at increasing precision: each bracket nests inside the last
for prec in (16, 64, 256):
    enc = log2_enclosure(19, prec)
    print(f"log2(19) at {prec:>3} bits: width {float(enc.width):.3e}, mid {float(enc.mid):.15f}")

# 3 * 16^(1 - log2(3)/2) against 16^(1 - log2(3)/4): these are equal, so no
# finite precision separates them and the comparison reports Undetermined
L = Log2(3)
lhs = Product(Const(3), Power(Const(16), Sum(Const(1), Product(Const(Fraction(-1, 2)), L))))
rhs = Power(Const(16), Sum(Const(1), Product(Const(Fraction(-1, 4)), L)))
print("exact tie at r = 16:", certified_compare(lhs, rhs, prec_cap=1024).outcome.value)

# a gap of 2^-300 needs about 300 bits of working precision
tiny = Sum(Log2(19), Const(Fraction(1, 2**300)))
v = certified_compare(Log2(19), tiny)
print(f"log2(19) < log2(19) + 2^-300: {v.outcome.value} at {v.prec_used} bits")
