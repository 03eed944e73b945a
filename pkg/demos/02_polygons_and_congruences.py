"""Polygons, forcing and lattice congruences on a few small lattices."""

from coxchains.cartan import parse_type
from coxchains.lattice import (
    boolean_lattice,
    congruence_from_edges,
    enumerate_polygons,
    forcing_preorder,
    is_polygonal,
    lattice_from_relations,
    maximal_chains,
    quotient,
)
from coxchains.preorder import collapse
from coxchains.roots import generate_positive_roots
from coxchains.weak_order import build_weak_order

n5 = lattice_from_relations(5, [(0, 1), (0, 2), (2, 3), (1, 4), (3, 4)])
m3 = lattice_from_relations(5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])
print("N5 polygonal:", is_polygonal(n5)[0])
ok, witness = is_polygonal(m3)
print("M3 polygonal:", ok, "witness", witness)
print("Boolean lattice 2^3:", len(enumerate_polygons(boolean_lattice(3))), "polygons, all squares")

# The weak order of A3: 24 elements, polygons are squares and hexagons.
wo = build_weak_order(generate_positive_roots(parse_type("A3")))
L = wo.lattice()
polys = enumerate_polygons(L)
print(f"\nA3 weak order: {len(polys)} polygons, "
      f"{sum(P.is_square for P in polys)} squares, {sum(not P.is_square for P in polys)} hexagons")

F = forcing_preorder(L, polys)
print("forcing classes of edges:", collapse(F)[0].n, "for", len(L.edges), "edges")

# Contract one side edge of a hexagon and see what else is forced.
P = next(P for P in polys if not P.is_square)
theta = congruence_from_edges(L, [P.left[1:3]], F)
Q, q = quotient(L, theta)
print(f"contracting {P.left[1:3]} forces {len(theta.removed_edges)} edges; quotient has {Q.n} elements "
      f"and {sum(1 for _ in maximal_chains(Q))} maximal chains")
