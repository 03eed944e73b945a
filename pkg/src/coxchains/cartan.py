"""Crystallographic Coxeter systems: Cartan matrices, symmetrizers and forms.

Everything here is exact. Vectors are sequences of ints or Fractions written
in simple-root coordinates.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

__all__ = [
    "CoxeterSystem",
    "CoxeterError",
    "build_system",
    "parse_type",
    "symmetric_form",
    "euler_form",
    "skew_form",
    "check_coxeter_word",
]

# a_{st} * a_{ts} -> m(s, t)
_PRODUCT_TO_ORDER = {0: 2, 1: 3, 2: 4, 3: 6}


class CoxeterError(ValueError):
    pass


@dataclass(frozen=True)
class CoxeterSystem:
    type_tag: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    symmetrizer: tuple[Fraction, ...]
    coxeter_orders: tuple[tuple[int, ...], ...]

    @property
    def name(self) -> str:
        return f"{self.type_tag}{self.rank}"

    @property
    def simply_laced(self) -> bool:
        return all(m <= 3 for row in self.coxeter_orders for m in row)

    def gram(self, s: int, t: int) -> Fraction:
        """(alpha_s, alpha_t) = delta(s) * a_{st}."""
        return self.symmetrizer[s] * self.cartan[s][t]

    def diagram_edges(self) -> list[tuple[int, int]]:
        return [
            (s, t)
            for s in range(self.rank)
            for t in range(s + 1, self.rank)
            if self.coxeter_orders[s][t] > 2
        ]


def _from_gram(type_tag: str, delta: list[int], bonds: dict[tuple[int, int], int]) -> CoxeterSystem:
    # bonds: (s, t) -> (alpha_s, alpha_t) for s < t, zero if absent
    n = len(delta)
    gram = [[0] * n for _ in range(n)]
    for s in range(n):
        gram[s][s] = 2 * delta[s]
    for (s, t), value in bonds.items():
        gram[s][t] = gram[t][s] = value
    cartan = []
    for s in range(n):
        row = []
        for t in range(n):
            entry = Fraction(gram[s][t], delta[s])
            if entry.denominator != 1:
                raise CoxeterError(f"non-integral Cartan entry for {type_tag}{n}")
            row.append(int(entry))
        cartan.append(tuple(row))
    orders = tuple(
        tuple(
            1 if s == t else _PRODUCT_TO_ORDER[cartan[s][t] * cartan[t][s]]
            for t in range(n)
        )
        for s in range(n)
    )
    system = CoxeterSystem(
        type_tag=type_tag,
        rank=n,
        cartan=tuple(cartan),
        symmetrizer=tuple(Fraction(d) for d in delta),
        coxeter_orders=orders,
    )
    _check_cartan(system)
    return system


def _check_cartan(system: CoxeterSystem) -> None:
    a = system.cartan
    d = system.symmetrizer
    for s in range(system.rank):
        if a[s][s] != 2:
            raise CoxeterError("diagonal Cartan entries must be 2")
        for t in range(system.rank):
            if s == t:
                continue
            if a[s][t] > 0 or (a[s][t] == 0) != (a[t][s] == 0):
                raise CoxeterError(f"bad off-diagonal Cartan entries at ({s}, {t})")
            if d[s] * a[s][t] != d[t] * a[t][s]:
                raise CoxeterError(f"symmetrizer fails at ({s}, {t})")


def build_system(type_tag: str, rank: int) -> CoxeterSystem:
    """Return the catalog Cartan data for a finite crystallographic type.

    Simple roots are numbered along the Dynkin diagram (Bourbaki). The short
    simple roots are: alpha_n in B_n, alpha_1..alpha_{n-1} in C_n, alpha_1 in
    G2, alpha_3 and alpha_4 in F4. Symmetrizers are normalized so that
    min delta = 1, i.e. delta(s) = (alpha_s, alpha_s) / 2.
    """
    t = type_tag.upper()
    n = rank
    chain = {(i, i + 1): -1 for i in range(n - 1)}
    if t == "A" and n >= 1:
        return _from_gram("A", [1] * n, chain)
    if t == "B" and n >= 2:
        bonds = {(i, i + 1): -2 for i in range(n - 1)}
        return _from_gram("B", [2] * (n - 1) + [1], bonds)
    if t == "C" and n >= 2:
        bonds = dict(chain)
        bonds[(n - 2, n - 1)] = -2
        return _from_gram("C", [1] * (n - 1) + [2], bonds)
    if t == "D" and n >= 4:
        bonds = {(i, i + 1): -1 for i in range(n - 2)}
        bonds[(n - 3, n - 1)] = -1
        return _from_gram("D", [1] * n, bonds)
    if t == "G" and n == 2:
        return _from_gram("G", [1, 3], {(0, 1): -3})
    if t == "F" and n == 4:
        return _from_gram("F", [2, 2, 1, 1], {(0, 1): -2, (1, 2): -2, (2, 3): -1})
    raise CoxeterError(f"unsupported type {type_tag}{rank}")


def parse_type(label: str) -> CoxeterSystem:
    """Parse catalog strings such as ``"A3"``, ``"D4"`` or ``"G2"``."""
    match = re.fullmatch(r"\s*([A-Ga-g])\s*(\d+)\s*", label)
    if not match:
        raise CoxeterError(f"cannot parse Coxeter type {label!r}")
    return build_system(match.group(1), int(match.group(2)))


def _check_dim(system: CoxeterSystem, *vectors: Sequence) -> None:
    for v in vectors:
        if len(v) != system.rank:
            raise CoxeterError(
                f"vector of length {len(v)} given for rank {system.rank}"
            )


def symmetric_form(system: CoxeterSystem, x: Sequence, y: Sequence) -> Fraction:
    _check_dim(system, x, y)
    total = Fraction(0)
    for s in range(system.rank):
        if not x[s]:
            continue
        for t in range(system.rank):
            if y[t]:
                total += x[s] * y[t] * system.gram(s, t)
    return total


def check_coxeter_word(system: CoxeterSystem, word: Sequence[int]) -> tuple[int, ...]:
    word = tuple(word)
    if sorted(word) != list(range(system.rank)):
        raise CoxeterError(f"{word} is not a Coxeter word for rank {system.rank}")
    return word


def euler_form(system: CoxeterSystem, c: Sequence[int], x: Sequence, y: Sequence) -> Fraction:
    """Euler form attached to the Coxeter word ``c``.

    On simple roots <a_s, a_t> is (a_s, a_t) when s comes after t in c, 0 when
    it comes before, and delta(s) on the diagonal. The diagonal choice makes
    the symmetrization equal to the symmetric form in every type (it is 1 in
    simply-laced types).
    """
    c = check_coxeter_word(system, c)
    _check_dim(system, x, y)
    position = {s: i for i, s in enumerate(c)}
    total = Fraction(0)
    for s in range(system.rank):
        if not x[s]:
            continue
        for t in range(system.rank):
            if not y[t]:
                continue
            if s == t:
                value = system.symmetrizer[s]
            elif position[s] > position[t]:
                value = system.gram(s, t)
            else:
                continue
            total += x[s] * y[t] * value
    return total


def skew_form(system: CoxeterSystem, c: Sequence[int], x: Sequence, y: Sequence) -> Fraction:
    return euler_form(system, c, x, y) - euler_form(system, c, y, x)
