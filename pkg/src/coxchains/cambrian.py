"""Coxeter elements, c-sorting, the Cambrian congruence and c-stability."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

from .cartan import CoxeterSystem, check_coxeter_word
from .chain_orders import Reference, mg_poset_fast, reference_from_word
from .lattice import (
    Congruence,
    CongruenceError,
    FiniteLabelledLattice,
    GuardExceeded,
    MGPoset,
    chain_image,
    congruence_from_partition,
    enumerate_polygons,
    maximal_chains,
    mg_preorder,
    quotient,
    quotient_edge_labelling,
)
from .preorder import ContractionReport, check_contraction
from .roots import RootSystem, order_subsystem
from .weak_order import WeakOrder, root_sequence

__all__ = [
    "CoxeterElement",
    "coxeter_element",
    "all_coxeter_elements",
    "parse_coxeter",
    "CambrianData",
    "build_cambrian",
    "CambrianChainMap",
    "cambrian_chain_map",
]


@dataclass(frozen=True)
class CoxeterElement:
    word: tuple[int, ...]
    # frozenset of (s, t) meaning s precedes t, one pair per diagram edge
    orientation: frozenset

    @property
    def inverse(self) -> "CoxeterElement":
        return _make(self.word[::-1], self.orientation_edges())

    def orientation_edges(self) -> list[tuple[int, int]]:
        return sorted(tuple(sorted(e)) for e in self.orientation)

    def same_element(self, other: "CoxeterElement") -> bool:
        return self.orientation == other.orientation


def _make(word, edges) -> CoxeterElement:
    pos = {s: i for i, s in enumerate(word)}
    orient = frozenset((s, t) if pos[s] < pos[t] else (t, s) for s, t in edges)
    return CoxeterElement(tuple(word), orient)


def coxeter_element(system: CoxeterSystem, word: Sequence[int]) -> CoxeterElement:
    return _make(check_coxeter_word(system, word), system.diagram_edges())


def all_coxeter_elements(system: CoxeterSystem) -> list[CoxeterElement]:
    """One word per orientation of the diagram (the lexicographically least)."""
    from itertools import permutations

    seen: dict[frozenset, CoxeterElement] = {}
    for word in permutations(range(system.rank)):
        c = coxeter_element(system, word)
        seen.setdefault(c.orientation, c)
    return sorted(seen.values(), key=lambda c: c.word)


def parse_coxeter(system: CoxeterSystem, spec: str) -> CoxeterElement:
    """``linear``, ``bipartite`` or a 1-based comma list such as ``2,1,3``.

    Bipartite puts the colour class not containing s1 first, so in A3 it is
    s2 s1 s3.
    """
    spec = spec.strip().lower()
    n = system.rank
    if spec == "linear":
        return coxeter_element(system, range(n))
    if spec == "bipartite":
        colour = {0: 0}
        stack = [0]
        adj = {s: set() for s in range(n)}
        for a, b in system.diagram_edges():
            adj[a].add(b)
            adj[b].add(a)
        while stack:
            s = stack.pop()
            for t in sorted(adj[s]):
                if t not in colour:
                    colour[t] = 1 - colour[s]
                    stack.append(t)
        word = [s for s in range(n) if colour.get(s, 0) == 1] + [s for s in range(n) if colour.get(s, 0) == 0]
        return coxeter_element(system, word)
    try:
        word = [int(x) - 1 for x in spec.replace(" ", "").split(",")]
    except ValueError as exc:
        raise ValueError(f"cannot parse Coxeter element {spec!r}") from exc
    return coxeter_element(system, word)


@dataclass
class CambrianData:
    rs: RootSystem
    wo: WeakOrder
    c: CoxeterElement
    sorting_words: list[tuple[int, ...]]
    blocks: list[list[frozenset]]
    sortable: list[bool]
    pi_down: list[int]
    theta: Congruence
    # ordered positive roots of each non-commutative subsystem, by the skew form
    subsystem_order: dict[int, tuple[int, ...]] = field(default_factory=dict)

    @property
    def sortables(self) -> list[int]:
        return [w for w in range(len(self.wo)) if self.sortable[w]]

    @cached_property
    def lattice(self) -> FiniteLabelledLattice:
        return self.wo.lattice()

    @cached_property
    def quotient(self) -> tuple[FiniteLabelledLattice, list[int]]:
        Q, q = quotient(self.lattice, self.theta)
        return quotient_edge_labelling(self.lattice, self.theta, Q), q

    @cached_property
    def reference(self) -> Reference:
        return reference_from_word(self.rs, self.wo, self.sorting_words[self.wo.top])

    @cached_property
    def reference_inverse(self) -> Reference:
        word = sorting_scan(self.wo, self.c.inverse.word, self.wo.top)[0]
        return reference_from_word(self.rs, self.wo, word)

    # alignment and stability -------------------------------------------------
    def is_c_aligned(self, w: int, psi_id: int) -> bool:
        order = self.subsystem_order[psi_id]
        inv = self.wo.inv(w)
        member = [bool(inv >> b & 1) for b in order]
        k = sum(member)
        if k == 0:
            return True
        if k == 1 and member[-1]:
            return True
        return all(member[:k]) and not any(member[k:])

    def is_fully_c_aligned(self, w: int) -> bool:
        return all(self.is_c_aligned(w, k) for k in self.subsystem_order)

    def is_c_stable_edge(self, v: int, w: int) -> bool:
        beta = _label(self.wo, v, w)
        return all(
            self.is_c_aligned(w, psi.id)
            for psi in self.rs.subsystems_containing(beta)
            if not psi.commutative
        )

    def contracted(self, v: int, w: int) -> bool:
        return self.theta.contracts(v, w)

    def criterion(self, v: int, w: int) -> bool:
        """beta in inv(pi_down(w)), i.e. the edge survives the quotient."""
        beta = _label(self.wo, v, w)
        return bool(self.wo.inv(self.pi_down[w]) >> beta & 1)

    def stable_sequence(self, chain: Sequence[int]) -> tuple[int, ...]:
        return tuple(
            _label(self.wo, a, b) for a, b in zip(chain, chain[1:]) if self.is_c_stable_edge(a, b)
        )

    def surviving_sequence(self, chain: Sequence[int]) -> tuple[int, ...]:
        return tuple(
            _label(self.wo, a, b) for a, b in zip(chain, chain[1:]) if not self.contracted(a, b)
        )

    def verify_cstable_theorem(self) -> dict:
        """Compare contraction, non-stability and the inversion criterion on every edge."""
        simply_laced = self.rs.system.simply_laced
        failures, discrepancies = [], []
        checked = 0
        for v, w in self.wo.cover_edges():
            checked += 1
            contracted = self.contracted(v, w)
            crit = self.criterion(v, w)
            stable = self.is_c_stable_edge(v, w)
            witness = {"edge": [v, w], "label": _label(self.wo, v, w),
                       "contracted": contracted, "c_stable": stable, "criterion": crit}
            if contracted == crit:
                failures.append(dict(witness, rule="criterion"))
            elif crit and not stable:
                failures.append(dict(witness, rule="stable_if_criterion"))
            elif stable == contracted:
                (failures if simply_laced else discrepancies).append(dict(witness, rule="equivalence"))
        return {"checked": checked, "failures": failures, "discrepancies": discrepancies,
                "simply_laced": simply_laced}


def _label(wo: WeakOrder, v: int, w: int) -> int:
    diff = wo.inv(w) & ~wo.inv(v)
    return diff.bit_length() - 1


def sorting_scan(wo: WeakOrder, c: Sequence[int], w: int) -> tuple[tuple[int, ...], list[frozenset]]:
    """Greedy scan of c^infinity, keeping letters that stay below w."""
    target = wo.inv(w)
    rank = wo.rs.rank
    guard = len(wo.rs) * rank + rank
    v = wo.bottom
    word: list[int] = []
    blocks: list[frozenset] = []
    scanned = 0
    while v != w:
        taken = []
        for s in c:
            nxt = wo.mult[v][s]
            if wo.length(nxt) > wo.length(v) and wo.inv(nxt) & ~target == 0:
                v = nxt
                word.append(s)
                taken.append(s)
            scanned += 1
        if scanned > guard:
            raise GuardExceeded("c-sorting scan exceeded its bound")
        blocks.append(frozenset(taken))
    return tuple(word), blocks


def _nested(blocks: Sequence[frozenset]) -> bool:
    return all(b >= a for a, b in zip(blocks[1:], blocks))


def pi_down_bruteforce(wo: WeakOrder, sortable: Sequence[bool]) -> list[int]:
    """Maximum sortable element below each w, with uniqueness checked."""
    srt = [u for u in range(len(wo)) if sortable[u]]
    out = []
    for w in range(len(wo)):
        inv = wo.inv(w)
        below = [u for u in srt if wo.inv(u) & ~inv == 0]
        best = max(below, key=wo.length)
        if any(wo.inv(u) & ~wo.inv(best) for u in below):
            raise CongruenceError(f"no unique maximal sortable element below {w}")
        out.append(best)
    return out


class _PiDownRecursion:
    """pi_down by recursion on an initial letter s of c.

    If s is a left descent of w, pi^c(w) = s pi^{scs}(sw); otherwise it is
    pi^{c without s}(w_J) for J = support of c minus s, where w_J is the
    parabolic factor with inv(w_J) = inv(w) restricted to Phi_J.
    """

    def __init__(self, wo: WeakOrder):
        self.wo = wo
        rs = wo.rs
        self.support = [frozenset(t for t in range(rs.rank) if beta[t]) for beta in rs.positives]
        self.memo: dict[tuple[tuple[int, ...], int], int] = {}

    def parabolic_mask(self, J: frozenset) -> int:
        mask = 0
        for i, sup in enumerate(self.support):
            if sup <= J:
                mask |= 1 << i
        return mask

    def __call__(self, c: tuple[int, ...], w: int) -> int:
        key = (c, w)
        if key in self.memo:
            return self.memo[key]
        wo = self.wo
        if not c:
            result = wo.bottom
        else:
            s = c[0]
            alpha = wo.rs.simple_indices[s]
            if wo.inv(w) >> alpha & 1:
                sw = wo.left_mult(s, w)
                result = wo.left_mult(s, self(c[1:] + (s,), sw))
            else:
                rest = c[1:]
                mask = self.parabolic_mask(frozenset(rest))
                wj = wo.by_inv[wo.inv(w) & mask]
                result = self(rest, wj)
        self.memo[key] = result
        return result


def build_cambrian(rs: RootSystem, wo: WeakOrder, c: CoxeterElement) -> CambrianData:
    words, blocks, sortable = [], [], []
    for w in range(len(wo)):
        word, blk = sorting_scan(wo, c.word, w)
        words.append(word)
        blocks.append(blk)
        sortable.append(_nested(blk))
    pi = pi_down_bruteforce(wo, sortable)
    rec = _PiDownRecursion(wo)
    for w in range(len(wo)):
        if rec(c.word, w) != pi[w]:
            raise CongruenceError(f"pi_down recursion disagrees with brute force at {w}")
    theta = congruence_from_partition(wo.lattice(), pi)
    order = {
        psi.id: order_subsystem(rs, c.word, psi) for psi in rs.subsystems if not psi.commutative
    }
    return CambrianData(rs, wo, c, words, blocks, sortable, pi, theta, order)


# the chain map ----------------------------------------------------------------


@dataclass
class CambrianChainMap:
    domain: MGPoset
    codomain: MGPoset
    class_map: list[int]
    report: ContractionReport
    consistent: bool
    min_class: int
    max_class: int
    fibre_intervals: list[bool]

    def summary(self) -> dict:
        return {
            "domain_classes": self.domain.size,
            "codomain_classes": self.codomain.size,
            "codomain_is_poset": self.codomain.is_poset,
            "domain_is_poset": self.domain.is_poset,
            "well_defined": self.consistent,
            "contraction": self.report.to_json(),
            "codomain_minima": self.codomain.min_ids,
            "codomain_maxima": self.codomain.max_ids,
            "min_is_sorting_class": self.codomain.min_ids == [self.min_class],
            "inverse_sorting_class_is_maximal": self.max_class in self.codomain.max_ids,
            "non_interval_fibres": sum(not x for x in self.fibre_intervals),
        }


def _is_interval(pre, members: Sequence[int]) -> bool:
    mins = [m for m in members if all(pre.leq(m, x) for x in members)]
    maxs = [m for m in members if all(pre.leq(x, m) for x in members)]
    if len(mins) != 1 or len(maxs) != 1:
        return False
    span = pre.up[mins[0]] & pre.down[maxs[0]]
    mask = 0
    for m in members:
        mask |= 1 << m
    return span == mask


def cambrian_chain_map(
    cd: CambrianData,
    chains: Sequence[tuple[int, ...]] | None = None,
    max_chains: int | None = None,
) -> CambrianChainMap:
    wo = cd.wo
    ref = cd.reference
    if chains is None:
        chains = list(wo.maximal_chains())
    if max_chains is not None and len(chains) > max_chains:
        raise GuardExceeded(f"{len(chains)} chains exceed the guard {max_chains}")
    domain = mg_poset_fast(wo, ref, chains)
    Q, q = cd.quotient
    qchains = list(maximal_chains(Q))
    codomain = mg_preorder(Q, ref.heap.less, chains=qchains, polygons=enumerate_polygons(Q))
    cmap = [-1] * domain.size
    consistent = True
    for c in chains:
        image = codomain.chain_class[chain_image(q, c)]
        i = domain.chain_class[c]
        if cmap[i] == -1:
            cmap[i] = image
        elif cmap[i] != image:
            consistent = False
    report = check_contraction(domain.preorder, codomain.preorder, cmap)
    low = codomain.chain_class[chain_image(q, wo.chain_of_word(cd.sorting_words[wo.top]))]
    inv_word = sorting_scan(wo, cd.c.inverse.word, wo.top)[0]
    high = codomain.chain_class[chain_image(q, wo.chain_of_word(inv_word))]
    fibres: dict[int, list[int]] = {}
    for i, j in enumerate(cmap):
        fibres.setdefault(j, []).append(i)
    intervals = [_is_interval(domain.preorder, fibres[j]) for j in sorted(fibres)]
    return CambrianChainMap(domain, codomain, cmap, report, consistent, low, high, intervals)


def check_ascending_uncontracted(cd: CambrianData) -> dict:
    """Non-square polygons with uncontracted bottom edges keep their ascending side."""
    L = cd.lattice
    less = cd.reference.heap.less
    checked, failures = 0, []
    for P in enumerate_polygons(L):
        if P.is_square:
            continue
        if cd.contracted(P.left[0], P.left[1]) or cd.contracted(P.right[0], P.right[1]):
            continue
        checked += 1
        for side in ("left", "right"):
            labels = [L.labels[e] for e in P.side_edges(side)]
            if all(less(a, b) for a, b in zip(labels, labels[1:])):
                bad = [e for e in P.side_edges(side) if cd.contracted(*e)]
                if bad:
                    failures.append({"polygon": [P.min, P.max], "contracted": bad})
    return {"checked": checked, "failures": failures}


def check_quotient_polygons(cd: CambrianData) -> dict:
    """Every non-square polygon of W_c has a descending side with two edges."""
    Q, _ = cd.quotient
    less = cd.reference.heap.less
    checked, failures = 0, []
    for P in enumerate_polygons(Q):
        if P.is_square:
            continue
        checked += 1
        ok = False
        for side in ("left", "right"):
            edges = P.side_edges(side)
            if len(edges) == 2:
                a, b = (Q.labels[e] for e in edges)
                if less(b, a):
                    ok = True
        if not ok:
            failures.append({"polygon": [P.min, P.max]})
    return {"checked": checked, "failures": failures}


def check_sortable_subposet(cd: CambrianData) -> bool:
    """The quotient is isomorphic, with labels, to the sortables under weak order."""
    Q, q = cd.quotient
    wo = cd.wo
    srt = cd.sortables
    if len(srt) != Q.n:
        return False
    for u in srt:
        for v in srt:
            if Q.leq(q[u], q[v]) != wo.leq(u, v):
                return False
    for (a, b), lab in Q.labels.items():
        u, v = cd.theta.class_min(a), cd.theta.class_min(b)
        if not (wo.inv(v) & ~wo.inv(u)) >> lab & 1:
            return False
    return True


def stability_via_keys(cd: CambrianData, chain: Sequence[int]) -> tuple[int, ...]:
    """Stable roots of a chain read off its inversion key.

    beta is stable iff no subsystem having beta as a non-simple root is
    inverted relative to the c-sorting reference.
    """
    from .chain_orders import class_key

    seq = root_sequence(cd.wo, chain)
    key = class_key(cd.reference, seq)
    out = []
    for beta in seq:
        inner = [
            psi.id for psi in cd.rs.subsystems_containing(beta)
            if not psi.commutative and beta not in psi.simple_ends
        ]
        if not any(key >> k & 1 for k in inner):
            out.append(beta)
    return tuple(out)


def sortable_count(cd: CambrianData) -> int:
    return sum(cd.sortable)


# functional entry points ----------------------------------------------------------


def c_sorting_word(cd: CambrianData, w: int) -> tuple[int, ...]:
    return cd.sorting_words[w]


def is_c_sortable(cd: CambrianData, w: int) -> bool:
    return cd.sortable[w]


def pi_down(cd: CambrianData, w: int) -> int:
    return cd.pi_down[w]


def cambrian_congruence(cd: CambrianData) -> Congruence:
    return cd.theta


def cambrian_quotient(cd: CambrianData) -> tuple[FiniteLabelledLattice, list[int]]:
    return cd.quotient


def is_c_aligned(cd: CambrianData, w: int, psi) -> bool:
    return cd.is_c_aligned(w, getattr(psi, "id", psi))


def is_c_stable_edge(cd: CambrianData, edge: tuple[int, int]) -> bool:
    return cd.is_c_stable_edge(*edge)


def verify_cstable_theorem(cd: CambrianData) -> dict:
    return cd.verify_cstable_theorem()


def stable_sequence(cd: CambrianData, chain: Sequence[int]) -> tuple[int, ...]:
    return cd.stable_sequence(chain)


def check_pi_down_monotone(cd: CambrianData) -> bool:
    wo, pi = cd.wo, cd.pi_down
    # covers generate the order, so checking them suffices
    return all(wo.leq(pi[v], pi[w]) for v, w in wo.cover_edges())


def quotient_label_sequence(cd: CambrianData, chain: Sequence[int]) -> tuple[int, ...]:
    Q, q = cd.quotient
    image = chain_image(q, chain)
    return tuple(Q.labels[e] for e in zip(image, image[1:]))


def verify_stable_sequences(
    cd: CambrianData,
    chains: Sequence[tuple[int, ...]] | None = None,
    chain_map: "CambrianChainMap | None" = None,
) -> dict:
    """Stable sequences against quotient chains.

    Reports chains whose stable sequence differs from the label sequence of
    their image and whether equal images match equal sequences. With a chain
    map, also asks whether unordered stable sets separate the square classes
    of the images.
    """
    if chains is None:
        chains = list(cd.wo.maximal_chains())
    q = cd.quotient[1]
    mismatches = []
    by_image: dict[tuple, set] = {}
    by_seq: dict[tuple, set] = {}
    by_set: dict[frozenset, set] = {}
    for ch in chains:
        stab = cd.stable_sequence(ch)
        image = chain_image(q, ch)
        if stab != quotient_label_sequence(cd, ch):
            mismatches.append({"chain": list(ch), "stable": list(stab)})
        by_image.setdefault(image, set()).add(stab)
        by_seq.setdefault(stab, set()).add(image)
        if chain_map is not None:
            by_set.setdefault(frozenset(stab), set()).add(chain_map.codomain.chain_class[image])
    iff = all(len(v) == 1 for v in by_image.values()) and all(len(v) == 1 for v in by_seq.values())
    out = {
        "checked": len(chains),
        "failures": mismatches if cd.rs.system.simply_laced else [],
        "discrepancies": [] if cd.rs.system.simply_laced else mismatches,
        "image_iff_sequence": iff,
    }
    if chain_map is not None:
        clash = sorted(sorted(k) for k, v in by_set.items() if len(v) > 1)
        out["sets_separate_classes"] = not clash
        out["set_witness"] = clash[0] if clash else None
    return out


__all__ += [
    "sorting_scan",
    "c_sorting_word",
    "is_c_sortable",
    "pi_down",
    "cambrian_congruence",
    "cambrian_quotient",
    "is_c_aligned",
    "is_c_stable_edge",
    "verify_cstable_theorem",
    "stable_sequence",
    "pi_down_bruteforce",
    "check_ascending_uncontracted",
    "check_quotient_polygons",
    "check_sortable_subposet",
    "stability_via_keys",
    "sortable_count",
    "check_pi_down_monotone",
    "quotient_label_sequence",
    "verify_stable_sequences",
]

