"""Heap posets, inversion keys of maximal chains, and the key-based MG poset."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .lattice import ChainClass, MGPoset, mg_preorder
from .preorder import Preorder, collapse, popcount
from .roots import RootSystem
from .weak_order import WeakOrder, root_sequence, validate_admissible

__all__ = [
    "HeapPoset",
    "Reference",
    "heap_poset",
    "reference_from_word",
    "reference_from_sequence",
    "class_key",
    "chain_keys",
    "mg_poset_fast",
    "mg_poset_polygon",
    "match_mg_posets",
    "collapse",
    "inclusion_order_agrees",
]


class InadmissibleSequence(ValueError):
    pass


@dataclass(frozen=True)
class HeapPoset:
    # up[b] = bitset of roots >= b
    up: tuple[int, ...]

    def less(self, a: int, b: int) -> bool:
        return a != b and bool(self.up[a] >> b & 1)

    def __len__(self) -> int:
        return len(self.up)


def heap_poset(rs: RootSystem, seq: Sequence[int]) -> HeapPoset:
    """Transitive closure of beta_i < beta_j (i < j) over non-commutative pairs."""
    if not validate_admissible(rs, seq):
        raise InadmissibleSequence(f"{tuple(seq)} is not a root sequence")
    noncomm = [not psi.commutative for psi in rs.subsystems]
    up = [0] * len(rs)
    for i in range(len(seq) - 1, -1, -1):
        a = seq[i]
        mask = 1 << a
        for b in seq[i + 1 :]:
            if noncomm[rs.pair_subsystem[a][b]]:
                mask |= up[b]
        up[a] = mask
    for a in range(len(rs)):
        for b in range(len(rs)):
            if a != b and up[a] >> b & 1 and up[b] >> a & 1:
                raise ArithmeticError("heap relation is not antisymmetric")
    return HeapPoset(tuple(up))


@dataclass(frozen=True)
class Reference:
    """A reference root sequence, its heap, and the orientation of each subsystem."""

    seq: tuple[int, ...]
    heap: HeapPoset
    # first[k] = the end of subsystem k that the reference lists first
    first: tuple[int, ...]
    last: tuple[int, ...]
    noncommutative: tuple[int, ...]

    @property
    def width(self) -> int:
        return len(self.first)


def reference_from_sequence(rs: RootSystem, seq: Sequence[int]) -> Reference:
    heap = heap_poset(rs, seq)
    pos = {b: i for i, b in enumerate(seq)}
    first, last = [], []
    for psi in rs.subsystems:
        a, b = psi.simple_ends
        if pos[a] > pos[b]:
            a, b = b, a
        first.append(a)
        last.append(b)
    noncomm = tuple(psi.id for psi in rs.subsystems if not psi.commutative)
    return Reference(tuple(seq), heap, tuple(first), tuple(last), noncomm)


def reference_from_word(rs: RootSystem, wo: WeakOrder, word: Sequence[int]) -> Reference:
    chain = wo.chain_of_word(word)
    if chain[-1] != wo.top:
        raise InadmissibleSequence("reference word is not a reduced word for w0")
    return reference_from_sequence(rs, root_sequence(wo, chain))


def class_key(ref: Reference, seq: Sequence[int]) -> int:
    """Bit k set iff non-commutative subsystem k is ordered against the reference."""
    pos = [0] * len(seq)
    for i, b in enumerate(seq):
        pos[b] = i
    key = 0
    for k in ref.noncommutative:
        if pos[ref.first[k]] > pos[ref.last[k]]:
            key |= 1 << k
    return key


def chain_keys(wo: WeakOrder, ref: Reference, chains: Sequence[tuple[int, ...]]) -> list[int]:
    return [class_key(ref, root_sequence(wo, c)) for c in chains]


def mg_poset_fast(
    wo: WeakOrder,
    ref: Reference,
    chains: Sequence[tuple[int, ...]] | None = None,
) -> MGPoset:
    """Classes keyed by inverted subsystems; covers add exactly one subsystem.

    Only keys witnessed by an actual chain are used.
    """
    if chains is None:
        chains = list(wo.maximal_chains())
    reps: dict[int, tuple[int, ...]] = {}
    chain_key: dict[tuple[int, ...], int] = {}
    for c in chains:
        key = class_key(ref, root_sequence(wo, c))
        reps.setdefault(key, c)
        chain_key[c] = key
    keys = sorted(reps, key=lambda k: (popcount(k), k))
    index = {k: i for i, k in enumerate(keys)}
    arcs = []
    for k in keys:
        for b in ref.noncommutative:
            if not k >> b & 1 and (k | 1 << b) in index:
                arcs.append((index[k], index[k | 1 << b]))
    pre = Preorder(len(keys), arcs)
    covers = set(pre.covers)
    return MGPoset(
        classes=[ChainClass(k, reps[k]) for k in keys],
        arcs=sorted(arcs),
        preorder=pre,
        is_poset=pre.is_poset,
        is_polygon_complete=all(a in covers for a in arcs),
        chain_class={c: index[k] for c, k in chain_key.items()},
    )


def mg_poset_polygon(
    wo: WeakOrder,
    ref: Reference,
    chains: Sequence[tuple[int, ...]] | None = None,
    polygons=None,
) -> MGPoset:
    """The same poset from increasing polygon moves in the weak order lattice."""
    L = wo.lattice()
    mg = mg_preorder(L, ref.heap.less, chains=chains, polygons=polygons)
    for cls in mg.classes:
        cls.key = class_key(ref, root_sequence(wo, cls.rep))
    return mg


def match_mg_posets(fast: MGPoset, slow: MGPoset) -> dict:
    """Order isomorphism between the two constructions via keys.

    Checks that every chain gets the same class partition, that keys are a
    bijection, and that the orders (and covers) coincide.
    """
    out = {"same_partition": True, "same_order": True, "same_covers": True}
    f_index = fast.key_index()
    if sorted(c.key for c in slow.classes) != sorted(f_index):
        out["same_partition"] = False
        return out
    perm = [f_index[c.key] for c in slow.classes]
    for chain, i in slow.chain_class.items():
        if fast.chain_class.get(chain) != perm[i]:
            out["same_partition"] = False
            break
    for a in range(slow.size):
        for b in range(slow.size):
            if slow.preorder.leq(a, b) != fast.preorder.leq(perm[a], perm[b]):
                out["same_order"] = False
    if {(perm[a], perm[b]) for a, b in slow.covers} != set(fast.covers):
        out["same_covers"] = False
    return out


def inclusion_order_agrees(mg: MGPoset) -> bool:
    """Does the MG order equal inclusion of keys on the witnessed classes?"""
    for a, ca in enumerate(mg.classes):
        for b, cb in enumerate(mg.classes):
            incl = ca.key & cb.key == ca.key
            if incl != mg.preorder.leq(a, b):
                return False
    return True
