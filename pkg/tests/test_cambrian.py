import pytest

from coxchains.cambrian import (
    all_coxeter_elements,
    build_cambrian,
    c_sorting_word,
    cambrian_chain_map,
    cambrian_congruence,
    cambrian_quotient,
    check_ascending_uncontracted,
    check_pi_down_monotone,
    check_quotient_polygons,
    check_sortable_subposet,
    coxeter_element,
    is_c_aligned,
    is_c_sortable,
    is_c_stable_edge,
    parse_coxeter,
    pi_down,
    stability_via_keys,
    stable_sequence,
    verify_cstable_theorem,
    verify_stable_sequences,
)
from coxchains.cartan import CoxeterError, parse_type
from coxchains.lattice import chain_image, maximal_chains
from coxchains.roots import generate_positive_roots
from coxchains.weak_order import build_weak_order

_CACHE = {}


def build(label):
    if label not in _CACHE:
        rs = generate_positive_roots(parse_type(label))
        _CACHE[label] = (rs, build_weak_order(rs))
    return _CACHE[label]


def cambrian(label, word):
    rs, wo = build(label)
    return build_cambrian(rs, wo, coxeter_element(rs.system, word))


def test_orientations():
    rs, _ = build("A3")
    cs = all_coxeter_elements(rs.system)
    assert len(cs) == 4
    # s1 s3 s2 and s3 s1 s2 are the same element
    assert coxeter_element(rs.system, (0, 2, 1)).same_element(coxeter_element(rs.system, (2, 0, 1)))
    assert not coxeter_element(rs.system, (0, 1, 2)).same_element(coxeter_element(rs.system, (2, 1, 0)))
    d4, _ = build("D4")
    assert len(all_coxeter_elements(d4.system)) == 8


def test_parse_coxeter():
    rs, _ = build("A3")
    assert parse_coxeter(rs.system, "linear").word == (0, 1, 2)
    assert parse_coxeter(rs.system, "bipartite").word == (1, 0, 2)
    assert parse_coxeter(rs.system, "2,1,3").word == (1, 0, 2)
    with pytest.raises(CoxeterError):
        parse_coxeter(rs.system, "1,1,2")
    with pytest.raises(ValueError):
        parse_coxeter(rs.system, "one,two")


def test_sorting_words_a2():
    cd = cambrian("A2", (0, 1))
    wo = cd.wo
    assert c_sorting_word(cd, wo.bottom) == () and is_c_sortable(cd, wo.bottom)
    assert c_sorting_word(cd, wo.top) == (0, 1, 0)
    assert is_c_sortable(cd, wo.top)
    s2s1 = wo.element_of_word((1, 0))
    assert c_sorting_word(cd, s2s1) == (1, 0)
    assert not is_c_sortable(cd, s2s1)
    assert cd.blocks[s2s1] == [frozenset({1}), frozenset({0})]


def test_pi_down_a2():
    cd = cambrian("A2", (0, 1))
    wo = cd.wo
    assert pi_down(cd, wo.element_of_word((1, 0))) == wo.element_of_word((1,))
    for w in cd.sortables:
        assert pi_down(cd, w) == w
    for x in range(len(wo)):
        for y in range(len(wo)):
            if wo.leq(x, y):
                assert wo.leq(pi_down(cd, x), pi_down(cd, y))


@pytest.mark.parametrize("label, size", [("A2", 5), ("A3", 14), ("B2", 6), ("B3", 20), ("G2", 8)])
def test_quotient_sizes(label, size):
    rs, wo = build(label)
    for c in all_coxeter_elements(rs.system):
        cd = build_cambrian(rs, wo, c)
        Q, q = cambrian_quotient(cd)
        assert Q.n == size == len(cd.sortables) == cambrian_congruence(cd).size
        assert check_sortable_subposet(cd)
        assert check_pi_down_monotone(cd)
        assert set(Q.labels) == set(Q.edges)


def test_pentagon_labels():
    cd = cambrian("A2", (0, 1))
    L = cd.lattice
    Q, q = cd.quotient
    for (a, b), lab in Q.labels.items():
        reps = [e for e in L.edges if q[e[0]] == a and q[e[1]] == b]
        assert reps and all(L.labels[e] == lab for e in reps)
    assert {chain_image(q, ch) for ch in maximal_chains(L)} == set(maximal_chains(Q))


def test_alignment_a2():
    cd = cambrian("A2", (0, 1))
    wo = cd.wo
    psi = cd.rs.subsystems[0]
    assert not is_c_aligned(cd, wo.element_of_word((1, 0)), psi)
    for w in range(len(wo)):
        assert is_c_aligned(cd, w, psi) == is_c_sortable(cd, w)


@pytest.mark.parametrize("label", ["A3", "B3", "G2", "D4"])
def test_sortable_iff_aligned(label):
    rs, wo = build(label)
    for c in all_coxeter_elements(rs.system):
        cd = build_cambrian(rs, wo, c)
        assert all(cd.is_fully_c_aligned(w) == cd.sortable[w] for w in range(len(wo)))


@pytest.mark.parametrize("label", ["A2", "A3", "D4", "B2", "B3", "G2"])
def test_cstable_theorem(label):
    rs, wo = build(label)
    for c in all_coxeter_elements(rs.system):
        rep = verify_cstable_theorem(build_cambrian(rs, wo, c))
        assert rep["checked"] == len(wo.cover_edges())
        assert rep["failures"] == []
        if rs.system.simply_laced:
            assert rep["discrepancies"] == []


def test_stable_edges_a2():
    cd = cambrian("A2", (0, 1))
    wo = cd.wo
    agree = 0
    for v, w in wo.cover_edges():
        agree += is_c_stable_edge(cd, (v, w)) == (not cd.contracted(v, w))
    assert agree == 6


def test_stable_sequence_a2():
    cd = cambrian("A2", (0, 1))
    rs, wo = cd.rs, cd.wo
    a1, a2 = rs.positives.index((1, 0)), rs.positives.index((0, 1))
    chain = wo.chain_of_word((1, 0, 1))
    assert stable_sequence(cd, chain) == (a2, a1)
    sorting = wo.chain_of_word(cd.sorting_words[wo.top])
    assert len(stable_sequence(cd, sorting)) == len(rs)


@pytest.mark.parametrize("label", ["A3", "A4", "D4"])
def test_stable_sequences(label):
    rs, wo = build(label)
    chains = list(wo.maximal_chains())
    for c in all_coxeter_elements(rs.system):
        cd = build_cambrian(rs, wo, c)
        cm = cambrian_chain_map(cd, chains)
        rep = verify_stable_sequences(cd, chains, cm)
        assert rep["failures"] == [] and rep["image_iff_sequence"]
        for ch in chains[:50]:
            assert stability_via_keys(cd, ch) == stable_sequence(cd, ch)
        linear = c.word == tuple(range(rs.rank)) or c.word == tuple(reversed(range(rs.rank)))
        if label.startswith("A") and linear:
            assert rep["sets_separate_classes"]


def test_stable_sets_bipartite_a3_counterexample():
    cd = cambrian("A3", (1, 0, 2))
    cm = cambrian_chain_map(cd)
    rep = verify_stable_sequences(cd, None, cm)
    assert not rep["sets_separate_classes"]
    assert rep["set_witness"] is not None


@pytest.mark.parametrize("label", ["A2", "A3", "B3", "G2"])
def test_chain_map(label):
    rs, wo = build(label)
    for c in all_coxeter_elements(rs.system):
        cd = build_cambrian(rs, wo, c)
        cm = cambrian_chain_map(cd)
        s = cm.summary()
        assert cm.consistent and cm.report.ok
        assert cm.codomain.is_poset and cm.domain.is_poset
        assert s["min_is_sorting_class"] and s["inverse_sorting_class_is_maximal"]
        if label == "A2":
            assert s["domain_classes"] == s["codomain_classes"] == 2


def test_a3_linear_chain_map_unique_max():
    cd = cambrian("A3", (0, 1, 2))
    cm = cambrian_chain_map(cd)
    assert cm.domain.size == 8
    assert len(cm.codomain.max_ids) == 1 and len(cm.codomain.min_ids) == 1


@pytest.mark.parametrize("label", ["A2", "A3", "B3"])
def test_polygon_corollaries(label):
    rs, wo = build(label)
    for c in all_coxeter_elements(rs.system):
        cd = build_cambrian(rs, wo, c)
        asc = check_ascending_uncontracted(cd)
        assert asc["failures"] == [] and asc["checked"] > 0
        qp = check_quotient_polygons(cd)
        assert qp["failures"] == []


def test_guard():
    from coxchains.lattice import GuardExceeded

    cd = cambrian("A3", (0, 1, 2))
    with pytest.raises(GuardExceeded):
        cambrian_chain_map(cd, max_chains=3)
