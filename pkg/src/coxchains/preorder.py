"""Finite preorders given by generating arcs, stored as reachability bitsets."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

import networkx as nx
from networkx.utils import UnionFind

__all__ = ["Preorder", "collapse", "ContractionReport", "check_contraction", "popcount"]


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass
class Preorder:
    """Reflexive-transitive closure of ``arcs`` on ``range(n)``."""

    n: int
    arcs: list[tuple[int, int]]

    def __post_init__(self):
        self.arcs = sorted(set(self.arcs))

    @cached_property
    def graph(self) -> nx.DiGraph:
        g = nx.DiGraph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.arcs)
        return g

    @cached_property
    def component(self) -> list[int]:
        """phi-class of each element; classes numbered by their least member."""
        comps = sorted(min(c) for c in nx.strongly_connected_components(self.graph))
        first = {m: i for i, m in enumerate(comps)}
        out = [-1] * self.n
        for comp in nx.strongly_connected_components(self.graph):
            cid = first[min(comp)]
            for x in comp:
                out[x] = cid
        return out

    @cached_property
    def up(self) -> list[int]:
        """up[x] = bitset of y with x <= y."""
        cond = nx.condensation(self.graph)
        members = cond.graph["mapping"]
        comp_up = {}
        for c in reversed(list(nx.topological_sort(cond))):
            mask = 0
            for x in cond.nodes[c]["members"]:
                mask |= 1 << x
            for d in cond.successors(c):
                mask |= comp_up[d]
            comp_up[c] = mask
        return [comp_up[members[x]] for x in range(self.n)]

    @cached_property
    def down(self) -> list[int]:
        out = [0] * self.n
        for x, mask in enumerate(self.up):
            m = mask
            while m:
                low = m & -m
                out[low.bit_length() - 1] |= 1 << x
                m ^= low
        return out

    def leq(self, x: int, y: int) -> bool:
        return bool(self.up[x] >> y & 1)

    def less(self, x: int, y: int) -> bool:
        return self.leq(x, y) and not self.leq(y, x)

    @property
    def is_poset(self) -> bool:
        return all(self.up[x] & self.down[x] == 1 << x for x in range(self.n))

    @cached_property
    def covers(self) -> list[tuple[int, int]]:
        """x < y strictly with nothing else between, read literally.

        In a preorder an element of a non-trivial phi-class has another
        element z with x <= z <= y, so such elements take part in no covers.
        """
        out = []
        for x in range(self.n):
            strict = self.up[x] & ~self.down[x]
            m = strict
            while m:
                low = m & -m
                y = low.bit_length() - 1
                m ^= low
                if self.up[x] & self.down[y] == (1 << x) | (1 << y):
                    out.append((x, y))
        return out

    def minimal(self) -> list[int]:
        return [x for x in range(self.n) if self.down[x] & ~self.up[x] == 0]

    def maximal(self) -> list[int]:
        return [x for x in range(self.n) if self.up[x] & ~self.down[x] == 0]

    def is_connected_subset(self, subset: Sequence[int]) -> bool:
        """Connectivity of the induced sub-preorder on ``subset``."""
        subset = list(subset)
        if len(subset) <= 1:
            return True
        mask = 0
        for x in subset:
            mask |= 1 << x
        uf = UnionFind(subset)
        for x in subset:
            related = (self.up[x] | self.down[x]) & mask
            while related:
                low = related & -related
                uf.union(x, low.bit_length() - 1)
                related ^= low
        return len({uf[x] for x in subset}) == 1


def collapse(p: Preorder) -> tuple[Preorder, list[int]]:
    """Quotient by mutual comparability; returns the poset and the class map."""
    comp = p.component
    k = max(comp) + 1 if comp else 0
    arcs = {(comp[a], comp[b]) for a, b in p.arcs if comp[a] != comp[b]}
    return Preorder(k, sorted(arcs)), comp


@dataclass
class ContractionReport:
    surjective: bool = True
    order_preserving: bool = True
    connected_fibres: bool = True
    covers_lift: bool = True
    witnesses: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.surjective and self.order_preserving and self.connected_fibres and self.covers_lift

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "surjective": self.surjective,
            "order_preserving": self.order_preserving,
            "connected_fibres": self.connected_fibres,
            "covers_lift": self.covers_lift,
            "witnesses": self.witnesses,
        }


def check_contraction(domain: Preorder, codomain: Preorder, f: Sequence[int]) -> ContractionReport:
    """Check the four conditions for ``f`` to be a contraction of preorders."""
    rep = ContractionReport()
    if len(f) != domain.n:
        raise ValueError("map length does not match the domain")
    image = set(f)
    missing = [y for y in range(codomain.n) if y not in image]
    if missing:
        rep.surjective = False
        rep.witnesses.append({"not_in_image": missing[:5]})
    # generating arcs suffice because the codomain relation is transitive
    for a, b in domain.arcs:
        if not codomain.leq(f[a], f[b]):
            rep.order_preserving = False
            rep.witnesses.append({"order_violation": [a, b]})
            break
    comp = codomain.component
    fibres: dict[int, list[int]] = {}
    for x, y in enumerate(f):
        fibres.setdefault(comp[y], []).append(x)
    for cls in sorted(fibres):
        if not domain.is_connected_subset(fibres[cls]):
            rep.connected_fibres = False
            rep.witnesses.append({"disconnected_fibre": fibres[cls][:10]})
    lifted = {(f[a], f[b]) for a, b in domain.covers}
    for y1, y2 in codomain.covers:
        if (y1, y2) not in lifted:
            rep.covers_lift = False
            rep.witnesses.append({"unlifted_cover": [y1, y2]})
    return rep

