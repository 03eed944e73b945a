"""Finite root systems in simple-root coordinates and their rank-two subsystems."""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .cartan import CoxeterSystem, check_coxeter_word, skew_form, symmetric_form

__all__ = [
    "Root",
    "RankTwoSubsystem",
    "RootSystem",
    "generate_positive_roots",
    "reflect",
    "rank_two_catalog",
    "order_subsystem",
    "vector_rank",
]

Root = tuple[int, ...]


@dataclass(frozen=True)
class RankTwoSubsystem:
    id: int
    pos_roots: tuple[int, ...]
    commutative: bool
    # positive roots in angular order, from one simple end of the subsystem to
    # the other; fixed orientation, independent of any Coxeter element
    angular: tuple[int, ...] = ()

    @property
    def simple_ends(self) -> tuple[int, int]:
        return self.angular[0], self.angular[-1]


@dataclass
class RootSystem:
    system: CoxeterSystem
    positives: list[Root]
    simple_indices: list[int]
    # reflection_table[s][i] = (sign, j) with s(beta_i) = sign * beta_j
    reflection_table: list[list[tuple[int, int]]]
    subsystems: list[RankTwoSubsystem] = field(default_factory=list)
    # subsystem id shared by each pair of distinct positive roots
    pair_subsystem: list[list[int]] = field(default_factory=list)

    def __post_init__(self):
        self.index = {beta: i for i, beta in enumerate(self.positives)}

    @property
    def rank(self) -> int:
        return self.system.rank

    def __len__(self) -> int:
        return len(self.positives)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.positives)) - 1

    def root(self, i: int) -> Root:
        return self.positives[i]

    def height(self, i: int) -> int:
        return sum(self.positives[i])

    def noncommutative(self) -> list[RankTwoSubsystem]:
        return [psi for psi in self.subsystems if not psi.commutative]

    def subsystems_containing(self, i: int) -> list[RankTwoSubsystem]:
        return [psi for psi in self.subsystems if i in psi.pos_roots]

    def form(self, i: int, j: int) -> Fraction:
        return symmetric_form(self.system, self.positives[i], self.positives[j])

    def coroot_pairing(self, gamma: Sequence[int], s: int) -> int:
        # <gamma, alpha_s^vee> = sum_t gamma_t a_{st}
        return sum(gamma[t] * self.system.cartan[s][t] for t in range(self.rank))

    def apply_simple(self, s: int, gamma: Sequence[int]) -> Root:
        k = self.coroot_pairing(gamma, s)
        out = list(gamma)
        out[s] -= k
        return tuple(out)

    def lookup_signed(self, vector: Sequence[int]) -> tuple[int, int]:
        vector = tuple(vector)
        if vector in self.index:
            return 1, self.index[vector]
        neg = tuple(-x for x in vector)
        if neg in self.index:
            return -1, self.index[neg]
        raise KeyError(f"{vector} is not a root")

    def reflect_by_root(self, beta: int, gamma: int) -> tuple[int, int]:
        """Apply the reflection r_beta to the positive root gamma."""
        b = self.positives[beta]
        g = self.positives[gamma]
        k = 2 * self.form(gamma, beta) / self.form(beta, beta)
        if k.denominator != 1:
            raise ArithmeticError("non-integral root pairing")
        return self.lookup_signed(tuple(gi - int(k) * bi for gi, bi in zip(g, b)))

    def to_json(self) -> dict:
        return {
            "positives": [list(beta) for beta in self.positives],
            "subsystems": [
                {"roots": list(psi.pos_roots), "commutative": psi.commutative}
                for psi in self.subsystems
            ],
        }


def generate_positive_roots(system: CoxeterSystem) -> RootSystem:
    """Close the simple roots under the simple reflections."""
    n = system.rank
    bound = 2 * n * n * 10
    simple = [tuple(int(s == t) for t in range(n)) for s in range(n)]
    found = set(simple)
    frontier = list(simple)

    def pairing(gamma, s):
        return sum(gamma[t] * system.cartan[s][t] for t in range(n))

    while frontier:
        nxt = []
        for gamma in frontier:
            for s in range(n):
                image = list(gamma)
                image[s] -= pairing(gamma, s)
                image = tuple(image)
                if all(x <= 0 for x in image):
                    continue
                if any(x < 0 for x in image):
                    raise ArithmeticError(f"mixed-sign vector {image}: bad Cartan matrix")
                if image not in found:
                    found.add(image)
                    nxt.append(image)
        if len(found) > bound:
            raise ArithmeticError("positive root closure does not terminate")
        frontier = nxt

    positives = sorted(found, key=lambda beta: (sum(beta), beta))
    rs = RootSystem(
        system=system,
        positives=positives,
        simple_indices=[positives.index(beta) for beta in simple],
        reflection_table=[],
    )
    rs.reflection_table = [
        [rs.lookup_signed(rs.apply_simple(s, beta)) for beta in positives]
        for s in range(n)
    ]
    rank_two_catalog(rs)
    return rs


def reflect(rs: RootSystem, s: int, beta: int) -> tuple[int, int]:
    """Signed index of s(beta); the sign is -1 exactly when beta = alpha_s."""
    return rs.reflection_table[s][beta]


def vector_rank(vectors: Sequence[Sequence]) -> int:
    rows = [[Fraction(x) for x in v] for v in vectors]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                factor = rows[r][col] / rows[rank][col]
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def _angular_order(rs: RootSystem, members: list[int]) -> tuple[int, ...]:
    # Coordinates in the basis (u, v) of the span; all positive roots lie in
    # an open half-plane so the sign of the 2x2 determinant is a total order.
    u, v = rs.positives[members[0]], rs.positives[members[1]]
    coords = {}
    for m in members:
        w = rs.positives[m]
        # solve w = a u + b v using two coordinates where (u, v) is invertible
        for p in range(rs.rank):
            for q in range(p + 1, rs.rank):
                det = u[p] * v[q] - u[q] * v[p]
                if det:
                    a = Fraction(w[p] * v[q] - w[q] * v[p], det)
                    b = Fraction(u[p] * w[q] - u[q] * w[p], det)
                    coords[m] = (a, b)
                    break
            if m in coords:
                break

    def cmp(i, j):
        (a1, b1), (a2, b2) = coords[i], coords[j]
        det = a1 * b2 - a2 * b1
        return -1 if det > 0 else (1 if det < 0 else 0)

    ordered = sorted(members, key=functools.cmp_to_key(cmp))
    # orient so that the end with the smaller index comes first
    if ordered[0] > ordered[-1]:
        ordered.reverse()
    return tuple(ordered)


def rank_two_catalog(rs: RootSystem) -> list[RankTwoSubsystem]:
    """Group positive roots by the 2-dimensional span of each pair.

    Maximality of a rank-two subsystem is exactly "all positive roots in one
    plane"; sub-arrangements such as the A1 x A1 inside B2 never appear.
    """
    N = len(rs.positives)
    pair = [[-1] * N for _ in range(N)]
    subsystems: list[RankTwoSubsystem] = []
    for i in range(N):
        for j in range(i + 1, N):
            if pair[i][j] >= 0:
                continue
            bi, bj = rs.positives[i], rs.positives[j]
            members = [
                k for k in range(N)
                if k in (i, j) or vector_rank([bi, bj, rs.positives[k]]) == 2
            ]
            sid = len(subsystems)
            for a in members:
                for b in members:
                    if a != b:
                        if pair[a][b] >= 0:
                            raise AssertionError("pair covered by two subsystems")
                        pair[a][b] = sid
            commutative = len(members) == 2 and rs.form(members[0], members[1]) == 0
            subsystems.append(
                RankTwoSubsystem(
                    id=sid,
                    pos_roots=tuple(members),
                    commutative=commutative,
                    angular=_angular_order(rs, members),
                )
            )
    rs.subsystems = subsystems
    rs.pair_subsystem = pair
    return subsystems


def order_subsystem(rs: RootSystem, c: Sequence[int], psi: RankTwoSubsystem) -> tuple[int, ...]:
    """Order the positive roots of a non-commutative subsystem by the skew form.

    beta_i precedes beta_j iff [beta_i | beta_j]_c > 0.
    """
    if psi.commutative:
        raise ValueError("commutative subsystems carry no canonical order")
    c = check_coxeter_word(rs.system, c)

    def cmp(i, j):
        value = skew_form(rs.system, c, rs.positives[i], rs.positives[j])
        if value == 0 and i != j:
            raise ArithmeticError("skew form vanishes inside a non-commutative subsystem")
        return -1 if value > 0 else (1 if value < 0 else 0)

    ordered = sorted(psi.pos_roots, key=functools.cmp_to_key(cmp))
    for a in range(len(ordered)):
        for b in range(a + 1, len(ordered)):
            if cmp(ordered[a], ordered[b]) != -1:
                raise ArithmeticError("skew form does not totally order the subsystem")
    return tuple(ordered)
