import pytest

from coxchains.cambrian import build_cambrian, parse_coxeter
from coxchains.cartan import parse_type
from coxchains.chain_orders import (
    InadmissibleSequence,
    class_key,
    heap_poset,
    inclusion_order_agrees,
    match_mg_posets,
    mg_poset_fast,
    mg_poset_polygon,
    reference_from_sequence,
    reference_from_word,
)
from coxchains.lattice import PolygonIndex, enumerate_polygons, square_equivalence_classes
from coxchains.roots import generate_positive_roots
from coxchains.weak_order import build_weak_order, root_sequence


def build(label):
    rs = generate_positive_roots(parse_type(label))
    return rs, build_weak_order(rs)


def sorting_reference(rs, wo, c="linear"):
    return build_cambrian(rs, wo, parse_coxeter(rs.system, c)).reference


def test_a2_heap_total():
    rs, _ = build("A2")
    a1, a2, a12 = (rs.positives.index(v) for v in [(1, 0), (0, 1), (1, 1)])
    heap = heap_poset(rs, (a1, a12, a2))
    assert heap.less(a1, a12) and heap.less(a12, a2) and heap.less(a1, a2)
    assert not heap.less(a2, a1)


def test_inadmissible_rejected():
    rs, _ = build("A2")
    a1, a2, a12 = (rs.positives.index(v) for v in [(1, 0), (0, 1), (1, 1)])
    with pytest.raises(InadmissibleSequence):
        heap_poset(rs, (a12, a1, a2))
    _, wo = build("A2")
    with pytest.raises(ValueError):
        reference_from_word(rs, wo, (0, 1))


def test_a3_linear_heap_is_lex():
    """Roots e_a - e_b ordered like the pairs (a, b) lexicographically, within each triple."""
    rs, wo = build("A3")
    ref = sorting_reference(rs, wo)

    def root(a, b):
        return rs.positives.index(tuple(int(a - 1 <= s <= b - 2) for s in range(3)))

    for i, j, k in [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)]:
        assert ref.heap.less(root(i, j), root(i, k))
        assert ref.heap.less(root(i, k), root(j, k))


def test_square_moves_keep_heap():
    rs, wo = build("A3")
    L = wo.lattice()
    chains = list(wo.maximal_chains())
    cls = square_equivalence_classes(chains, PolygonIndex(enumerate_polygons(L)))
    heaps = {}
    for c, k in zip(chains, cls):
        h = heap_poset(rs, root_sequence(wo, c)).up
        assert heaps.setdefault(k, h) == h
    assert len(set(heaps.values())) == len(heaps)


def test_keys():
    rs, wo = build("A3")
    ref = sorting_reference(rs, wo)
    assert class_key(ref, ref.seq) == 0
    full = sum(1 << k for k in ref.noncommutative)
    assert class_key(ref, tuple(reversed(ref.seq))) == full
    keys = {class_key(ref, root_sequence(wo, c)) for c in wo.maximal_chains()}
    assert len(keys) == 8


@pytest.mark.parametrize("label, size", [("A2", 2), ("A3", 8), ("B2", 2), ("G2", 2), ("B3", 14)])
def test_fast_matches_polygon(label, size):
    rs, wo = build(label)
    for c in ["linear", "bipartite"]:
        ref = sorting_reference(rs, wo, c)
        fast = mg_poset_fast(wo, ref)
        slow = mg_poset_polygon(wo, ref)
        assert fast.size == size
        assert fast.is_poset and slow.is_poset and slow.is_polygon_complete
        assert all(match_mg_posets(fast, slow).values())


def test_a4_every_c_is_poset():
    from coxchains.cambrian import all_coxeter_elements

    rs, wo = build("A4")
    chains = list(wo.maximal_chains())
    for c in all_coxeter_elements(rs.system):
        cd = build_cambrian(rs, wo, c)
        mg = mg_poset_fast(wo, cd.reference, chains)
        assert mg.size == 62 and mg.is_poset


def test_non_sorting_reference_matches_polygon():
    rs, wo = build("A3")
    chains = list(wo.maximal_chains())
    for ch in chains:
        ref = reference_from_sequence(rs, root_sequence(wo, ch))
        assert all(match_mg_posets(mg_poset_fast(wo, ref, chains), mg_poset_polygon(wo, ref, chains)).values())


@pytest.mark.parametrize("label", ["A2", "A3"])
def test_inclusion_order(label):
    rs, wo = build(label)
    assert inclusion_order_agrees(mg_poset_fast(wo, sorting_reference(rs, wo)))


def test_json_key_format():
    rs, wo = build("A2")
    mg = mg_poset_fast(wo, sorting_reference(rs, wo))
    data = mg.to_json(key_width=1)
    assert [c["key"] for c in data["classes"]] == ["0", "1"]
    assert data["covers"] == [[0, 1]]
