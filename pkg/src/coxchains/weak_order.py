"""The right weak order on a finite Coxeter group, keyed by inversion bitsets."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .roots import RootSystem

__all__ = [
    "WOElement",
    "WeakOrder",
    "NotALatticeError",
    "GROUP_ORDERS",
    "group_order",
    "build_weak_order",
    "edge_label",
    "join",
    "meet",
    "root_sequence",
    "validate_admissible",
    "is_biclosed",
    "bits",
]


class NotALatticeError(ValueError):
    pass


def bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


GROUP_ORDERS = {
    "A": lambda n: _factorial(n + 1),
    "B": lambda n: 2**n * _factorial(n),
    "C": lambda n: 2**n * _factorial(n),
    "D": lambda n: 2 ** (n - 1) * _factorial(n),
    "G": lambda n: 12,
    "F": lambda n: 1152,
}


def group_order(type_tag: str, rank: int) -> int:
    return GROUP_ORDERS[type_tag](rank)


@dataclass(frozen=True)
class WOElement:
    id: int
    inv: int
    length: int
    word: tuple[int, ...]


@dataclass
class WeakOrder:
    rs: RootSystem
    elements: list[WOElement]
    # up_edges[w] = sorted [(label, target)]; down_edges likewise
    up_edges: list[list[tuple[int, int]]]
    down_edges: list[list[tuple[int, int]]]
    # mult[w][s] = id of w s (right multiplication)
    mult: list[list[int]]
    bottom: int
    top: int
    by_inv: dict[int, int] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.elements)

    def inv(self, w: int) -> int:
        return self.elements[w].inv

    def length(self, w: int) -> int:
        return self.elements[w].length

    def leq(self, v: int, w: int) -> bool:
        a = self.elements[v].inv
        return a & self.elements[w].inv == a

    def is_cover(self, v: int, w: int) -> bool:
        return any(t == w for _, t in self.up_edges[v])

    def left_mult(self, s: int, w: int) -> int:
        """Id of s w, via the inversion-set update under a left simple factor."""
        rs = self.rs
        alpha = rs.simple_indices[s]
        inv = self.elements[w].inv
        out = 0
        for g in range(len(rs)):
            if g == alpha:
                continue
            sign, image = rs.reflection_table[s][g]
            if inv >> image & 1:
                out |= 1 << g
        if not inv >> alpha & 1:
            out |= 1 << alpha
        return self.by_inv[out]

    def element_of_word(self, word: Sequence[int]) -> int:
        w = self.bottom
        for s in word:
            w = self.mult[w][s]
        return w

    def is_reduced(self, word: Sequence[int]) -> bool:
        return self.length(self.element_of_word(word)) == len(word)

    def chain_of_word(self, word: Sequence[int]) -> tuple[int, ...]:
        """Maximal chain of a reduced word (prefix products)."""
        chain = [self.bottom]
        for s in word:
            nxt = self.mult[chain[-1]][s]
            if self.length(nxt) != self.length(chain[-1]) + 1:
                raise ValueError(f"word {tuple(word)} is not reduced")
            chain.append(nxt)
        return tuple(chain)

    def word_of_chain(self, chain: Sequence[int]) -> tuple[int, ...]:
        word = []
        for a, b in zip(chain, chain[1:]):
            word.append(self.mult[a].index(b))
        return tuple(word)

    def cover_edges(self) -> list[tuple[int, int]]:
        return [(v, w) for v in range(len(self)) for _, w in self.up_edges[v]]

    def maximal_chains(self) -> Iterator[tuple[int, ...]]:
        """Chains e -> w0 in label-lexicographic order (explicit stack DFS)."""
        stack = [(self.bottom,)]
        while stack:
            chain = stack.pop()
            last = chain[-1]
            if last == self.top:
                yield chain
                continue
            for _, target in reversed(self.up_edges[last]):
                stack.append(chain + (target,))

    def count_maximal_chains(self) -> int:
        paths = [0] * len(self)
        paths[self.bottom] = 1
        # ids are in length order, so a single forward sweep suffices
        for v in range(len(self)):
            for _, t in self.up_edges[v]:
                paths[t] += paths[v]
        return paths[self.top]

    def lattice(self):
        """The weak order as a labelled lattice whose labels are positive-root ids."""
        from .lattice import FiniteLabelledLattice

        covers = [[t for _, t in self.up_edges[v]] for v in range(len(self))]
        labels = {(v, t): lab for v in range(len(self)) for lab, t in self.up_edges[v]}
        return FiniteLabelledLattice(
            n=len(self),
            covers=covers,
            labels=labels,
            label_universe=len(self.rs),
            bottom=self.bottom,
            top=self.top,
        )

    def to_json(self) -> dict:
        return self.lattice().to_json()


def build_weak_order(rs: RootSystem, check_order: bool = True) -> WeakOrder:
    """Breadth-first search from e, multiplying by generators on the right.

    Each element carries the images w(alpha_t) of the simple roots; w s is
    longer than w iff w(alpha_s) is positive, and then
    inv(ws) = inv(w) + {w(alpha_s)}.
    """
    system = rs.system
    n = system.rank
    simple = [tuple(int(s == t) for t in range(n)) for s in range(n)]
    images = [tuple(simple)]
    elements = [WOElement(0, 0, 0, ())]
    by_inv = {0: 0}
    frontier = [0]
    while frontier:
        nxt = []
        for w in frontier:
            img = images[w]
            for s in range(n):
                sign, beta = rs.lookup_signed(img[s])
                if sign < 0:
                    continue
                inv = elements[w].inv | (1 << beta)
                if inv in by_inv:
                    continue
                # ws(alpha_t) = w(alpha_t) - a_{st} w(alpha_s)
                new_img = tuple(
                    tuple(x - system.cartan[s][t] * y for x, y in zip(img[t], img[s]))
                    for t in range(n)
                )
                wid = len(elements)
                elements.append(WOElement(wid, inv, elements[w].length + 1, elements[w].word + (s,)))
                images.append(new_img)
                by_inv[inv] = wid
                nxt.append(wid)
        frontier = nxt

    if check_order:
        expected = group_order(system.type_tag, n)
        if len(elements) != expected:
            raise ArithmeticError(f"built {len(elements)} elements, expected |W| = {expected}")

    mult = [[-1] * n for _ in elements]
    up = [[] for _ in elements]
    down = [[] for _ in elements]
    for w, img in enumerate(images):
        for s in range(n):
            sign, beta = rs.lookup_signed(img[s])
            target = by_inv[elements[w].inv ^ (1 << beta)]
            mult[w][s] = target
            if sign > 0:
                up[w].append((beta, target))
                down[target].append((beta, w))
    for lst in up + down:
        lst.sort()
    top = by_inv[rs.full_mask]
    return WeakOrder(rs, elements, up, down, mult, bottom=0, top=top, by_inv=by_inv)


def edge_label(wo: WeakOrder, v: int, w: int) -> int:
    diff = wo.inv(w) & ~wo.inv(v)
    if wo.inv(v) & ~wo.inv(w) or diff == 0 or diff & (diff - 1):
        raise ValueError(f"{v} -> {w} is not a cover")
    return diff.bit_length() - 1


def join(wo: WeakOrder, x: int, y: int) -> int:
    need = wo.inv(x) | wo.inv(y)
    bounds = [u for u in range(len(wo)) if wo.inv(u) & need == need]
    return _extremum(wo, bounds, upper=True)


def meet(wo: WeakOrder, x: int, y: int) -> int:
    have = wo.inv(x) & wo.inv(y)
    bounds = [u for u in range(len(wo)) if wo.inv(u) & ~have == 0]
    return _extremum(wo, bounds, upper=False)


def _extremum(wo: WeakOrder, bounds: list[int], upper: bool) -> int:
    for u in bounds:
        if all(wo.leq(u, b) if upper else wo.leq(b, u) for b in bounds):
            return u
    raise NotALatticeError("no unique bound")


def root_sequence(wo: WeakOrder, chain: Sequence[int]) -> tuple[int, ...]:
    if not chain or chain[0] != wo.bottom or chain[-1] != wo.top:
        raise ValueError("chain does not run from e to w0")
    return tuple(edge_label(wo, a, b) for a, b in zip(chain, chain[1:]))


def validate_admissible(rs: RootSystem, seq: Sequence[int]) -> bool:
    """Betweenness check: each subsystem's interior roots sit between its ends."""
    if sorted(seq) != list(range(len(rs))):
        return False
    pos = {beta: i for i, beta in enumerate(seq)}
    for psi in rs.subsystems:
        order = sorted(psi.angular, key=pos.__getitem__)
        if order != list(psi.angular) and order != list(reversed(psi.angular)):
            return False
    return True


def is_biclosed(rs: RootSystem, subset: int) -> bool:
    """Closed and co-closed under non-negative combinations inside each plane.

    Written directly from the two closure conditions over all triples
    (alpha, gamma, beta) with gamma a positive combination of alpha and beta.
    """
    for psi in rs.subsystems:
        order = psi.angular
        m = len(order)
        for i in range(m):
            for j in range(i + 1, m):
                a, b = order[i], order[j]
                a_in = subset >> a & 1
                b_in = subset >> b & 1
                for k in range(i + 1, j):
                    g_in = subset >> order[k] & 1
                    if a_in and b_in and not g_in:
                        return False
                    if g_in and not a_in and not b_in:
                        return False
    return True
