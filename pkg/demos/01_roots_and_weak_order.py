"""Root systems from Cartan matrices, and the weak order built on inversion sets."""

from coxchains.cartan import euler_form, parse_type, skew_form
from coxchains.roots import generate_positive_roots
from coxchains.weak_order import build_weak_order, join, meet

for label in ["A3", "B3", "G2", "D4"]:
    rs = generate_positive_roots(parse_type(label))
    wo = build_weak_order(rs)
    print(f"{label}: {len(rs)} positive roots, |W| = {len(wo)}, "
          f"{sum(1 for _ in wo.maximal_chains())} maximal chains")

# A2 in detail. Roots are ordered by height, so the two simple roots come first.
rs = generate_positive_roots(parse_type("A2"))
print("\nA2 positive roots:", rs.positives)
for sub in rs.subsystems:
    print("  rank-two subsystem", sub.id, "roots", sub.pos_roots, "commutative" if sub.commutative else "")

c = (0, 1)
a1, a2 = (1, 0), (0, 1)
print("Euler form <a1,a2> for c = s1 s2:", euler_form(rs.system, c, a1, a2),
      " skew form:", skew_form(rs.system, c, a1, a2))

wo = build_weak_order(rs)
for w in range(len(wo)):
    inv = [rs.positives[i] for i in range(len(rs)) if wo.inv(w) >> i & 1]
    print(f"  element {w}: length {wo.length(w)}, inversions {inv}")

x, y = wo.element_of_word((0,)), wo.element_of_word((1,))
print("join of s1 and s2 is the top:", join(wo, x, y) == wo.top, " meet is the bottom:", meet(wo, x, y) == wo.bottom)
