"""Closed forms and brute-force checks used to cross-examine the main constructions."""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .roots import RootSystem
from .weak_order import WeakOrder, group_order, is_biclosed

__all__ = [
    "positive_root_count",
    "coxeter_catalan",
    "biclosed_sets",
    "biclosed_matches_inversions",
    "group_order",
]


def positive_root_count(type_tag: str, rank: int) -> int:
    return {
        "A": lambda n: n * (n + 1) // 2,
        "B": lambda n: n * n,
        "C": lambda n: n * n,
        "D": lambda n: n * (n - 1),
        "G": lambda n: 6,
        "F": lambda n: 24,
    }[type_tag](rank)


def coxeter_catalan(type_tag: str, rank: int) -> int:
    n = rank
    if type_tag == "A":
        return comb(2 * n + 2, n + 1) // (n + 2)
    if type_tag in "BC":
        return comb(2 * n, n)
    if type_tag == "D":
        value = Fraction(3 * n - 2, n) * comb(2 * n - 2, n - 1)
        return int(value)
    if type_tag == "G":
        return 8
    if type_tag == "F":
        return 105
    raise KeyError(type_tag)


def biclosed_sets(rs: RootSystem, limit: int = 16) -> list[int]:
    """Every biclosed subset of the positive roots, by exhaustion."""
    if len(rs) > limit:
        raise ValueError(f"2^{len(rs)} subsets is beyond the brute-force limit")
    return [m for m in range(1 << len(rs)) if is_biclosed(rs, m)]


def biclosed_matches_inversions(rs: RootSystem, wo: WeakOrder) -> bool:
    return sorted(biclosed_sets(rs)) == sorted(e.inv for e in wo.elements)
