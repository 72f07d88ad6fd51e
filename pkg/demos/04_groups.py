"""Counting subgroups of concrete finite groups.

Groups are Cayley tables. Subgroups are found by extending known subgroups
by one element at a time and closing under multiplication. Each count is
then checked against the bound B(|G|).
"""

from sgcert.groups import check_theorem, dihedral, direct_product, elementary_abelian, enumerate_subgroups, symmetric

s4 = symmetric(4)
subs = enumerate_subgroups(s4)
by_order = {}
for s in subs:
    by_order[s.order] = by_order.get(s.order, 0) + 1
print("S4 subgroups by order:", dict(sorted(by_order.items())), "total", len(subs))

for g in (dihedral(16), elementary_abelian(2, 6), direct_product(symmetric(3), elementary_abelian(3, 2))):
    chk = check_theorem(g)
    print(f"{g.name:<12} order {g.order:>3}: {chk.count:>5} subgroups, f bound {chk.f_bound}, {chk.outcome.value}")
