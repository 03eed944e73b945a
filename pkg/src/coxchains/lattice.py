"""Finite polygonal lattices: polygons, forcing, congruences, quotients, chains.

Elements are ``range(n)`` and ids must form a linear extension (every cover
goes from a smaller id to a larger one). With that convention the join of x
and y is the lowest set bit of ``up[x] & up[y]`` and the meet is the highest
set bit of ``down[x] & down[y]``; both are checked, not assumed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterator, Sequence

from networkx.utils import UnionFind

from .preorder import Preorder, popcount

__all__ = [
    "FiniteLabelledLattice",
    "Polygon",
    "Congruence",
    "ChainClass",
    "MGPoset",
    "NotALatticeError",
    "CongruenceError",
    "PolygonalityError",
    "GuardExceeded",
    "is_polygonal",
    "enumerate_polygons",
    "polygons_by_interval_scan",
    "forcing_preorder",
    "is_forcing_consistent",
    "congruence_from_edges",
    "principal_congruence_bruteforce",
    "congruence_from_partition",
    "quotient",
    "quotient_edge_labelling",
    "maximal_chains",
    "chain_image",
    "polygon_move_neighbors",
    "PolygonIndex",
    "square_equivalence_classes",
    "polygon_move_components",
    "mg_preorder",
    "lattice_from_relations",
    "boolean_lattice",
    "order_congruence_counterexample",
]

MAX_CHAINS = 10**7


class NotALatticeError(ValueError):
    pass


class CongruenceError(AssertionError):
    pass


class PolygonalityError(ValueError):
    pass


class GuardExceeded(RuntimeError):
    pass


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class FiniteLabelledLattice:
    def __init__(
        self,
        n: int,
        covers: Sequence[Sequence[int]],
        labels: dict[tuple[int, int], int] | None = None,
        label_universe: int = 0,
        bottom: int = 0,
        top: int | None = None,
        check: bool = True,
    ):
        self.n = n
        self.covers = [sorted(c) for c in covers]
        self.lower = [[] for _ in range(n)]
        for x, ups in enumerate(self.covers):
            for y in ups:
                if y <= x:
                    raise ValueError(f"cover {x} -> {y} does not respect the id order")
                self.lower[y].append(x)
        self.labels = dict(labels or {})
        self.label_universe = label_universe
        self.bottom = bottom
        self.top = n - 1 if top is None else top
        if (self.bottom, self.top) != (0, n - 1):
            raise ValueError("bottom and top must be the first and last ids")
        up = [0] * n
        for x in range(n - 1, -1, -1):
            mask = 1 << x
            for y in self.covers[x]:
                mask |= up[y]
            up[x] = mask
        down = [0] * n
        for x in range(n):
            mask = 1 << x
            for y in self.lower[x]:
                mask |= down[y]
            down[x] = mask
        self.up = up
        self.down = down
        if check:
            self.verify_lattice()

    def __len__(self) -> int:
        return self.n

    # order ----------------------------------------------------------------
    def leq(self, x: int, y: int) -> bool:
        return bool(self.up[x] >> y & 1)

    def interval(self, x: int, y: int) -> int:
        return self.up[x] & self.down[y]

    def is_cover(self, x: int, y: int) -> bool:
        return y in self.covers[x]

    def join(self, x: int, y: int) -> int:
        upper = self.up[x] & self.up[y]
        if not upper:
            raise NotALatticeError(f"{x} and {y} have no upper bound")
        z = (upper & -upper).bit_length() - 1
        if self.up[z] != upper:
            raise NotALatticeError(f"{x} and {y} have no join")
        return z

    def meet(self, x: int, y: int) -> int:
        lower = self.down[x] & self.down[y]
        if not lower:
            raise NotALatticeError(f"{x} and {y} have no lower bound")
        z = lower.bit_length() - 1
        if self.down[z] != lower:
            raise NotALatticeError(f"{x} and {y} have no meet")
        return z

    def verify_lattice(self) -> None:
        full = (1 << self.n) - 1
        if self.up[self.bottom] != full or self.down[self.top] != full:
            raise NotALatticeError("not bounded")
        for x in range(self.n):
            for y in range(x + 1, self.n):
                self.join(x, y)
                self.meet(x, y)

    # edges ----------------------------------------------------------------
    @cached_property
    def edges(self) -> list[tuple[int, int]]:
        return [(x, y) for x in range(self.n) for y in self.covers[x]]

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: i for i, e in enumerate(self.edges)}

    def label(self, x: int, y: int) -> int:
        return self.labels[(x, y)]

    def with_labels(self, labels: dict[tuple[int, int], int], label_universe: int) -> "FiniteLabelledLattice":
        out = FiniteLabelledLattice.__new__(FiniteLabelledLattice)
        out.__dict__.update({k: v for k, v in self.__dict__.items() if k in _CORE})
        out.labels = dict(labels)
        out.label_universe = label_universe
        return out

    # exports --------------------------------------------------------------
    def to_json(self) -> dict:
        out = {
            "n": self.n,
            "covers": [[x, y] for x, y in self.edges],
            "labels": {f"{x},{y}": self.labels[(x, y)] for x, y in self.edges if (x, y) in self.labels},
            "bottom": self.bottom,
            "top": self.top,
        }
        return out

    def to_dot(
        self,
        name: str = "L",
        node_label: Callable[[int], str] | None = None,
        edge_label: Callable[[int, int], str] | None = None,
        clusters: Sequence[Sequence[int]] | None = None,
    ) -> str:
        lines = [f"digraph {name} {{", "  rankdir=BT;"]
        if clusters:
            for k, members in enumerate(clusters):
                lines.append(f"  subgraph cluster_{k} {{")
                for x in sorted(members):
                    lines.append(f"    {x};")
                lines.append("  }")
        for x in range(self.n):
            text = node_label(x) if node_label else str(x)
            lines.append(f'  {x} [label="{text}"];')
        for x, y in self.edges:
            if edge_label is not None:
                text = edge_label(x, y)
            elif (x, y) in self.labels:
                text = str(self.labels[(x, y)])
            else:
                text = None
            attr = f' [dir=forward, label="{text}"]' if text is not None else " [dir=forward]"
            lines.append(f"  {x} -> {y}{attr};")
        lines.append("}")
        return "\n".join(lines) + "\n"


_CORE = ("n", "covers", "lower", "bottom", "top", "up", "down")


def lattice_from_relations(n: int, cover_pairs: Sequence[tuple[int, int]], **kw) -> FiniteLabelledLattice:
    covers = [[] for _ in range(n)]
    for x, y in cover_pairs:
        covers[x].append(y)
    return FiniteLabelledLattice(n, covers, **kw)


def boolean_lattice(k: int) -> FiniteLabelledLattice:
    """Subsets of a k-set ordered by inclusion, ids sorted by (size, mask).

    Each cover adding element i is labelled i.
    """
    masks = sorted(range(1 << k), key=lambda m: (popcount(m), m))
    pos = {m: i for i, m in enumerate(masks)}
    covers = [[] for _ in masks]
    labels = {}
    for m in masks:
        for i in range(k):
            if not m >> i & 1:
                covers[pos[m]].append(pos[m | 1 << i])
                labels[(pos[m], pos[m | 1 << i])] = i
    return FiniteLabelledLattice(len(masks), covers, labels=labels, label_universe=k)


# polygons ------------------------------------------------------------------


@dataclass(frozen=True)
class Polygon:
    min: int
    max: int
    # full chains from min to max; left goes through the smaller atom
    left: tuple[int, ...]
    right: tuple[int, ...]

    @property
    def is_square(self) -> bool:
        return len(self.left) == 3 and len(self.right) == 3

    @property
    def atoms(self) -> tuple[int, int]:
        return self.left[1], self.right[1]

    @property
    def elements(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.left) | set(self.right)))

    def side_edges(self, side: str) -> list[tuple[int, int]]:
        chain = self.left if side == "left" else self.right
        return list(zip(chain, chain[1:]))


def _polygon_of_interval(L: FiniteLabelledLattice, x: int, y: int) -> Polygon | None:
    """The interval [x, y] as two disjoint paths, or None if it is not one."""
    inside = L.interval(x, y)
    starts = [a for a in L.covers[x] if inside >> a & 1]
    if len(starts) != 2:
        return None
    if len([b for b in L.lower[y] if inside >> b & 1]) != 2:
        return None
    chains = []
    for a in starts:
        chain = [x, a]
        while chain[-1] != y:
            z = chain[-1]
            ups = [u for u in L.covers[z] if inside >> u & 1]
            downs = [d for d in L.lower[z] if inside >> d & 1]
            if len(ups) != 1 or len(downs) != 1:
                return None
            chain.append(ups[0])
        chains.append(tuple(chain))
    if popcount(inside) != len(chains[0]) + len(chains[1]) - 2:
        return None
    if set(chains[0][1:-1]) & set(chains[1][1:-1]):
        return None
    chains.sort(key=lambda c: c[1])
    return Polygon(x, y, chains[0], chains[1])


def is_polygonal(L: FiniteLabelledLattice) -> tuple[bool, tuple | None]:
    """Both polygon conditions on every pair of upper and of lower covers."""
    for x in range(L.n):
        ups = L.covers[x]
        for i in range(len(ups)):
            for j in range(i + 1, len(ups)):
                top = L.join(ups[i], ups[j])
                if _polygon_of_interval(L, x, top) is None:
                    return False, ("upper", x, ups[i], ups[j])
    for y in range(L.n):
        downs = L.lower[y]
        for i in range(len(downs)):
            for j in range(i + 1, len(downs)):
                bot = L.meet(downs[i], downs[j])
                if _polygon_of_interval(L, bot, y) is None:
                    return False, ("lower", y, downs[i], downs[j])
    return True, None


def enumerate_polygons(L: FiniteLabelledLattice) -> list[Polygon]:
    """One polygon per element and pair of its upper covers."""
    out = []
    seen = set()
    for x in range(L.n):
        ups = L.covers[x]
        for i in range(len(ups)):
            for j in range(i + 1, len(ups)):
                top = L.join(ups[i], ups[j])
                poly = _polygon_of_interval(L, x, top)
                if poly is None:
                    raise PolygonalityError(f"[{x}, {top}] is not a polygon")
                key = (poly.min, poly.max, poly.left, poly.right)
                if key not in seen:
                    seen.add(key)
                    out.append(poly)
    return out


def polygons_by_interval_scan(L: FiniteLabelledLattice) -> list[Polygon]:
    """Oracle: test every interval against the polygon definition directly."""
    out = []
    for x in range(L.n):
        for y in _bits(L.up[x] & ~(1 << x)):
            inside = L.interval(x, y)
            chains = []
            stack = [(x,)]
            while stack and len(chains) <= 2:
                chain = stack.pop()
                if chain[-1] == y:
                    chains.append(chain)
                    continue
                for z in L.covers[chain[-1]]:
                    if inside >> z & 1:
                        stack.append(chain + (z,))
            if len(chains) != 2:
                continue
            a, b = set(chains[0]), set(chains[1])
            covered = 0
            for z in a | b:
                covered |= 1 << z
            if covered == inside and a & b == {x, y}:
                chains.sort(key=lambda c: c[1])
                out.append(Polygon(x, y, chains[0], chains[1]))
    return out


# forcing and congruences -----------------------------------------------------


def _forcing_arcs(L: FiniteLabelledLattice, polygons: Sequence[Polygon]) -> list[tuple[int, int]]:
    idx = L.edge_index
    arcs = []
    for P in polygons:
        bl = idx[(P.left[0], P.left[1])]
        br = idx[(P.right[0], P.right[1])]
        tl = idx[(P.left[-2], P.left[-1])]
        tr = idx[(P.right[-2], P.right[-1])]
        arcs += [(bl, tr), (tr, bl), (br, tl), (tl, br)]
        sides = [idx[e] for e in P.side_edges("left")[1:-1] + P.side_edges("right")[1:-1]]
        for corner in (bl, br, tl, tr):
            arcs += [(corner, s) for s in sides]
    return arcs


def forcing_preorder(L: FiniteLabelledLattice, polygons: Sequence[Polygon] | None = None) -> Preorder:
    """Preorder on ``L.edges`` (indexed by ``L.edge_index``) generated in polygons."""
    if polygons is None:
        polygons = enumerate_polygons(L)
    return Preorder(len(L.edges), _forcing_arcs(L, polygons))


def is_forcing_consistent(L: FiniteLabelledLattice, forcing: Preorder | None = None) -> bool:
    forcing = forcing or forcing_preorder(L)
    value: dict[int, int] = {}
    for i, e in enumerate(L.edges):
        c = forcing.component[i]
        if value.setdefault(c, L.labels[e]) != L.labels[e]:
            return False
    return True


@dataclass
class Congruence:
    class_of: list[int]
    # classes in order of their least element
    classes: list[list[int]]
    removed_edges: frozenset

    @property
    def size(self) -> int:
        return len(self.classes)

    def contracts(self, x: int, y: int) -> bool:
        return self.class_of[x] == self.class_of[y]

    def class_min(self, k: int) -> int:
        return self.classes[k][0]

    def class_max(self, k: int) -> int:
        return self.classes[k][-1]


def congruence_from_partition(L: FiniteLabelledLattice, class_of: Sequence[int]) -> Congruence:
    """Normalize and verify a partition: interval classes and the congruence law."""
    groups: dict[int, list[int]] = {}
    for x, c in enumerate(class_of):
        groups.setdefault(c, []).append(x)
    classes = sorted((sorted(g) for g in groups.values()), key=lambda g: g[0])
    norm = [0] * L.n
    for k, members in enumerate(classes):
        for x in members:
            norm[x] = k
    for members in classes:
        lo, hi = members[0], members[-1]
        mask = 0
        for x in members:
            mask |= 1 << x
        if L.interval(lo, hi) != mask:
            raise CongruenceError(f"class {members[:6]} is not an interval")
    removed = frozenset((x, y) for x, y in L.edges if norm[x] == norm[y])
    # the law on generating pairs (contracted covers) implies it for all pairs
    for x, y in sorted(removed):
        for z in range(L.n):
            if norm[L.join(x, z)] != norm[L.join(y, z)] or norm[L.meet(x, z)] != norm[L.meet(y, z)]:
                raise CongruenceError(f"congruence law fails for {x} ~ {y} with {z}")
    return Congruence(norm, classes, removed)


def congruence_from_edges(
    L: FiniteLabelledLattice,
    seed_edges,
    forcing: Preorder | None = None,
) -> Congruence:
    """Smallest congruence contracting ``seed_edges``, via forcing closure."""
    forcing = forcing or forcing_preorder(L)
    idx = L.edge_index
    reach = 0
    for e in seed_edges:
        reach |= forcing.up[idx[tuple(e)]]
    uf = UnionFind(range(L.n))
    contracted = set()
    for i in _bits(reach):
        x, y = L.edges[i]
        uf.union(x, y)
        contracted.add((x, y))
    theta = congruence_from_partition(L, [uf[x] for x in range(L.n)])
    if theta.removed_edges != frozenset(contracted):
        raise CongruenceError("forcing closure disagrees with the generated partition")
    return theta


def principal_congruence_bruteforce(L: FiniteLabelledLattice, seed_edges) -> Congruence:
    """Oracle: iterate the join/meet law to a fixpoint, no forcing involved."""
    uf = UnionFind(range(L.n))
    for x, y in seed_edges:
        uf.union(x, y)
    changed = True
    while changed:
        changed = False
        groups: dict[int, list[int]] = {}
        for x in range(L.n):
            groups.setdefault(uf[x], []).append(x)
        for members in groups.values():
            a = members[0]
            for b in members[1:]:
                for z in range(L.n):
                    for p, q in ((L.join(a, z), L.join(b, z)), (L.meet(a, z), L.meet(b, z))):
                        if uf[p] != uf[q]:
                            uf.union(p, q)
                            changed = True
    return congruence_from_partition(L, [uf[x] for x in range(L.n)])


# quotients -------------------------------------------------------------------


def quotient(L: FiniteLabelledLattice, theta: Congruence) -> tuple[FiniteLabelledLattice, list[int]]:
    """L / theta with classes numbered by least element, plus the map q.

    Covers of the quotient are computed from the quotient order itself and
    then compared with the images of uncontracted covers of L.
    """
    q = theta.class_of
    k = theta.size
    qup = [0] * k
    for c, members in enumerate(theta.classes):
        mask = 0
        for x in members:
            for y in _bits(L.up[x]):
                mask |= 1 << q[y]
        qup[c] = mask
    qdown = [0] * k
    for c in range(k):
        for d in _bits(qup[c]):
            qdown[d] |= 1 << c
    for c in range(k):
        if qup[c] & qdown[c] != 1 << c:
            raise CongruenceError("quotient relation is not antisymmetric")
    covers = [[] for _ in range(k)]
    for c in range(k):
        for d in _bits(qup[c] & ~(1 << c)):
            if qup[c] & qdown[d] == (1 << c) | (1 << d):
                covers[c].append(d)
    images = {(q[x], q[y]) for x, y in L.edges if q[x] != q[y]}
    hasse = {(c, d) for c in range(k) for d in covers[c]}
    if images != hasse:
        raise CongruenceError("images of uncontracted covers are not the quotient covers")
    Q = FiniteLabelledLattice(k, covers)
    return Q, list(q)


def quotient_edge_labelling(
    L: FiniteLabelledLattice, theta: Congruence, Q: FiniteLabelledLattice
) -> FiniteLabelledLattice:
    """Carry labels of L to Q, checking constancy over all representatives."""
    q = theta.class_of
    labels: dict[tuple[int, int], int] = {}
    for x, y in L.edges:
        if q[x] == q[y]:
            continue
        key = (q[x], q[y])
        lab = L.labels[(x, y)]
        if labels.setdefault(key, lab) != lab:
            raise CongruenceError(f"labels of quotient cover {key} are not constant")
    return Q.with_labels(labels, L.label_universe)


# maximal chains ---------------------------------------------------------------


def maximal_chains(L: FiniteLabelledLattice, limit: int = MAX_CHAINS) -> Iterator[tuple[int, ...]]:
    """Bottom-to-top chains, in ascending-id order of the next element."""
    stack = [(L.bottom,)]
    count = 0
    while stack:
        chain = stack.pop()
        last = chain[-1]
        if last == L.top:
            count += 1
            if count > limit:
                raise GuardExceeded(f"more than {limit} maximal chains")
            yield chain
            continue
        for y in reversed(L.covers[last]):
            stack.append(chain + (y,))


def chain_image(q: Sequence[int], chain: Sequence[int]) -> tuple[int, ...]:
    out = [q[chain[0]]]
    for x in chain[1:]:
        if q[x] != out[-1]:
            out.append(q[x])
    return tuple(out)


class PolygonIndex:
    """Look up polygons by (min, atom) to find polygon moves of a chain."""

    def __init__(self, polygons: Sequence[Polygon]):
        self.polygons = list(polygons)
        self.by_start: dict[tuple[int, int], list[tuple[int, str]]] = {}
        for k, P in enumerate(self.polygons):
            self.by_start.setdefault((P.left[0], P.left[1]), []).append((k, "left"))
            self.by_start.setdefault((P.right[0], P.right[1]), []).append((k, "right"))

    def moves(self, chain: Sequence[int]) -> list[tuple[tuple[int, ...], int, str]]:
        """All (neighbour chain, polygon index, side of ``chain``) pairs."""
        chain = tuple(chain)
        out = []
        for i in range(len(chain) - 1):
            for k, side in self.by_start.get((chain[i], chain[i + 1]), ()):
                P = self.polygons[k]
                mine, other = (P.left, P.right) if side == "left" else (P.right, P.left)
                if chain[i : i + len(mine)] == mine:
                    out.append((chain[:i] + other + chain[i + len(mine) :], k, side))
        return out


def square_equivalence_classes(
    chains: Sequence[tuple[int, ...]], index: PolygonIndex
) -> list[int]:
    """Class id per chain (numbered by first appearance) under square moves."""
    pos = {c: i for i, c in enumerate(chains)}
    uf = UnionFind(range(len(chains)))
    for i, c in enumerate(chains):
        for other, k, _ in index.moves(c):
            if index.polygons[k].is_square:
                uf.union(i, pos[other])
    first: dict[int, int] = {}
    return [first.setdefault(uf[i], len(first)) for i in range(len(chains))]


def polygon_move_neighbors(
    L: FiniteLabelledLattice, chain: Sequence[int], polygons: Sequence[Polygon] | None = None
) -> list[tuple[tuple[int, ...], Polygon]]:
    index = PolygonIndex(enumerate_polygons(L) if polygons is None else polygons)
    return [(other, index.polygons[k]) for other, k, _ in index.moves(chain)]


def polygon_move_components(chains: Sequence[tuple[int, ...]], index: PolygonIndex) -> int:
    pos = {c: i for i, c in enumerate(chains)}
    uf = UnionFind(range(len(chains)))
    for i, c in enumerate(chains):
        for other, _, _ in index.moves(c):
            uf.union(i, pos[other])
    return len({uf[i] for i in range(len(chains))})


# the preorder on square classes ------------------------------------------------


@dataclass
class ChainClass:
    key: int | None
    rep: tuple[int, ...]


@dataclass
class MGPoset:
    classes: list[ChainClass]
    # generating arcs (increasing polygon moves between distinct or equal classes)
    arcs: list[tuple[int, int]]
    preorder: Preorder
    is_poset: bool
    is_polygon_complete: bool
    chain_class: dict[tuple[int, ...], int] = field(default_factory=dict)

    @property
    def size(self) -> int:
        return len(self.classes)

    @property
    def covers(self) -> list[tuple[int, int]]:
        return self.preorder.covers

    @property
    def min_ids(self) -> list[int]:
        return self.preorder.minimal()

    @property
    def max_ids(self) -> list[int]:
        return self.preorder.maximal()

    def key_index(self) -> dict[int, int]:
        return {c.key: i for i, c in enumerate(self.classes)}

    def to_json(self, key_width: int | None = None) -> dict:
        def fmt(key):
            if key is None:
                return None
            width = key_width or max(1, key.bit_length())
            return format(key, f"0{width}b")[::-1]

        return {
            "classes": [{"key": fmt(c.key), "rep": list(c.rep)} for c in self.classes],
            "covers": [list(e) for e in self.covers],
            "is_poset": self.is_poset,
            "polygon_complete": self.is_polygon_complete,
        }


def _ascending(labels: Sequence[int], below: Callable[[int, int], bool]) -> bool:
    return all(below(a, b) for a, b in zip(labels, labels[1:]))


def ascending_sides(
    L: FiniteLabelledLattice, polygons: Sequence[Polygon], below: Callable[[int, int], bool]
) -> dict[int, str]:
    """Side of each non-square polygon that is ascending; the other must descend."""
    out = {}
    for k, P in enumerate(polygons):
        if P.is_square:
            continue
        lab_l = [L.labels[e] for e in P.side_edges("left")]
        lab_r = [L.labels[e] for e in P.side_edges("right")]
        above = lambda a, b: below(b, a)  # noqa: E731
        if _ascending(lab_l, below) and _ascending(lab_r, above):
            out[k] = "left"
        elif _ascending(lab_r, below) and _ascending(lab_l, above):
            out[k] = "right"
        else:
            raise PolygonalityError(f"polygon [{P.min}, {P.max}] has no ascending/descending pair")
    return out


def mg_preorder(
    L: FiniteLabelledLattice,
    below: Callable[[int, int], bool],
    chains: Sequence[tuple[int, ...]] | None = None,
    polygons: Sequence[Polygon] | None = None,
    check_forcing: bool = True,
) -> MGPoset:
    """Square classes of maximal chains ordered by increasing polygon moves.

    ``below(a, b)`` is the strict order of the reference poset on labels.
    """
    polygons = list(enumerate_polygons(L) if polygons is None else polygons)
    if check_forcing and not is_forcing_consistent(L, forcing_preorder(L, polygons)):
        raise PolygonalityError("labelling is not forcing-consistent")
    asc = ascending_sides(L, polygons, below)
    if chains is None:
        chains = list(maximal_chains(L))
    index = PolygonIndex(polygons)
    cls = square_equivalence_classes(chains, index)
    k = max(cls) + 1
    reps = [None] * k
    for c, i in zip(chains, cls):
        if reps[i] is None:
            reps[i] = c
    pos = {c: i for i, c in enumerate(chains)}
    arcs = set()
    for c, i in zip(chains, cls):
        for other, p, side in index.moves(c):
            if p in asc and asc[p] == side:
                arcs.add((i, cls[pos[other]]))
    pre = Preorder(k, [a for a in arcs if a[0] != a[1]])
    cover_set = set(pre.covers)
    complete = all(a != b and (a, b) in cover_set for a, b in arcs)
    return MGPoset(
        classes=[ChainClass(None, reps[i]) for i in range(k)],
        arcs=sorted(arcs),
        preorder=pre,
        is_poset=pre.is_poset and all(a != b for a, b in arcs),
        is_polygon_complete=complete,
        chain_class={c: i for c, i in zip(chains, cls)},
    )


# regression fixture -----------------------------------------------------------


def order_congruence_counterexample() -> dict:
    """An order congruence on a non-lattice whose chain images are not maximal.

    Elements (ids in a linear extension):
    0 = x1_min, 1 = x1, 2 = x2_min, 3 = x1_max, 4 = x3_min, 5 = x3,
    6 = x2_max, 7 = x3_max.
    """
    covers = [
        (0, 2), (0, 1), (1, 3), (1, 5), (2, 6), (2, 4),
        (3, 6), (4, 5), (5, 7), (6, 7),
    ]
    classes = [0, 0, 1, 0, 2, 2, 1, 2]
    return {"n": 8, "covers": covers, "classes": classes}
