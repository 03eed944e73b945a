"""Maximal chains of the weak order, grouped by square moves and ordered by polygon moves.

Each chain reads off a sequence of positive roots. Its class is recorded by the
non-commutative rank-two subsystems it orders against a fixed reference chain.
"""

from coxchains.cambrian import build_cambrian, parse_coxeter
from coxchains.cartan import parse_type
from coxchains.chain_orders import match_mg_posets, mg_poset_fast, mg_poset_polygon
from coxchains.roots import generate_positive_roots
from coxchains.weak_order import build_weak_order, root_sequence

rs = generate_positive_roots(parse_type("A3"))
wo = build_weak_order(rs)
chains = list(wo.maximal_chains())
cd = build_cambrian(rs, wo, parse_coxeter(rs.system, "linear"))
ref = cd.reference

print("reference chain roots:", [rs.positives[i] for i in ref.seq])
print("non-commutative subsystems:", len(ref.noncommutative))

fast = mg_poset_fast(wo, ref, chains)
slow = mg_poset_polygon(wo, ref, chains)
print(f"{len(chains)} chains fall into {fast.size} classes")
print("poset:", fast.is_poset, " polygon complete:", slow.is_polygon_complete)
print("the two constructions agree:", all(match_mg_posets(fast, slow).values()))

width = len(rs.subsystems)
for i, cl in enumerate(fast.classes):
    up = [b for a, b in fast.covers if a == i]
    print(f"  class {i}: key {cl.key:0{width}b}, covered by {up}")

chain = chains[5]
print("\none chain:", chain)
print("its roots:", [rs.positives[i] for i in root_sequence(wo, chain)])
print("its class:", fast.chain_class[chain])
