"""Commutation classes of reduced words of the longest permutation.

The second higher Bruhat order is rebuilt from words alone, then matched with
the chain classes of the type A weak order.
"""

from coxchains.bruhat import (
    build_B_n_2,
    compare_with_mg,
    count_reduced_words,
    map_f,
    reduced_words,
    sylvester_classes,
)
from coxchains.cambrian import build_cambrian, cambrian_chain_map, parse_coxeter
from coxchains.cartan import parse_type
from coxchains.chain_orders import mg_poset_fast
from coxchains.roots import generate_positive_roots
from coxchains.weak_order import build_weak_order

for n in range(2, 6):
    print(f"n = {n}: {count_reduced_words(n)} reduced words, {build_B_n_2(n).size} commutation classes")

print("\nreduced words for n = 3 (letters are adjacent transpositions):")
for w in reduced_words(3):
    print("  ", " ".join(str(i + 1) for i in w))

n = 4
rs = generate_positive_roots(parse_type(f"A{n}"))
wo = build_weak_order(rs)
cd = build_cambrian(rs, wo, parse_coxeter(rs.system, "linear"))
rep = compare_with_mg(build_B_n_2(n), rs, mg_poset_fast(wo, cd.reference))
print(f"\nB({n},2) against the chain classes of A{n}: bijective {rep['bijective']}, same order {rep['same_order']}")

print(f"binary search trees on {n + 1} keys: {len(sylvester_classes(n + 1))}")
f = map_f(n, rs, wo, cd, cambrian_chain_map(cd))
print(f"map to the Cambrian side: {f['domain_size']} -> {f['codomain_size']}, "
      f"contraction {f['contraction']['ok']}, commutes {f['commutes']}")
print("fibres that are not intervals:", f["non_interval_fibres"], f["non_interval_witness"])
