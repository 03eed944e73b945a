"""Sortable elements, the Cambrian quotient and the induced map on chain classes."""

from coxchains.cambrian import (
    all_coxeter_elements,
    build_cambrian,
    cambrian_chain_map,
    verify_stable_sequences,
)
from coxchains.cartan import parse_type
from coxchains.roots import generate_positive_roots
from coxchains.weak_order import build_weak_order

rs = generate_positive_roots(parse_type("A3"))
wo = build_weak_order(rs)

for c in all_coxeter_elements(rs.system):
    cd = build_cambrian(rs, wo, c)
    Q, _ = cd.quotient
    cm = cambrian_chain_map(cd)
    s = cm.summary()
    rep = cd.verify_cstable_theorem()
    name = " ".join(f"s{i + 1}" for i in c.word)
    print(f"c = {name}: {sum(cd.sortable)} sortable, quotient {Q.n} elements, "
          f"chain classes {s['domain_classes']} -> {s['codomain_classes']}, "
          f"contraction {cm.report.ok}, c-stable edges agree {not rep['failures']}")

# Sorting words for c = s1 s2 s3, and where the projection sends each element.
cd = build_cambrian(rs, wo, all_coxeter_elements(rs.system)[0])
print("\nelement  sorting word       sortable  projects to")
for w in range(len(wo)):
    word = " ".join(f"s{i + 1}" for i in cd.sorting_words[w]) or "e"
    print(f"{w:>7}  {word:<17}  {str(cd.sortable[w]):<8}  {cd.pi_down[w]}")

st = verify_stable_sequences(cd, chain_map=cambrian_chain_map(cd))
print("\nsurviving roots decide the image class:", st["image_iff_sequence"])
print("stable root sets separate image classes:", st["sets_separate_classes"])
