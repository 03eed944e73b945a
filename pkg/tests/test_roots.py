import pytest

from coxchains.cartan import build_system, parse_type, symmetric_form
from coxchains.roots import generate_positive_roots, order_subsystem, rank_two_catalog, reflect, vector_rank


def roots(label):
    return generate_positive_roots(parse_type(label))


def rid(rs, vec):
    return rs.positives.index(tuple(vec))


@pytest.mark.parametrize("label, count", [("A2", 3), ("A3", 6), ("B3", 9), ("G2", 6), ("D4", 12), ("F4", 24)])
def test_counts(label, count):
    assert len(roots(label)) == count


def test_a2_positives():
    assert sorted(roots("A2").positives) == [(0, 1), (1, 0), (1, 1)]


@pytest.mark.parametrize("label", ["A3", "B3", "C3", "G2", "D4"])
def test_closed_under_reflections(label):
    rs = roots(label)
    for s in range(rs.rank):
        alpha = rs.simple_indices[s]
        assert reflect(rs, s, alpha) == (-1, alpha)
        for b in range(len(rs)):
            if b != alpha:
                sign, image = reflect(rs, s, b)
                assert sign == 1 and 0 <= image < len(rs)


def test_small_reflections():
    rs = roots("A2")
    assert reflect(rs, 0, rid(rs, (0, 1))) == (1, rid(rs, (1, 1)))
    b2 = roots("B2")
    assert reflect(b2, 0, rid(b2, (1, 1)))[0] == 1


def test_catalog_shapes():
    a2 = roots("A2")
    assert len(a2.subsystems) == 1 and not a2.subsystems[0].commutative
    assert len(a2.subsystems[0].pos_roots) == 3

    a3 = rank_two_catalog(roots("A3"))
    assert sum(not p.commutative for p in a3) == 4
    assert sum(p.commutative for p in a3) == 3

    b2 = roots("B2")
    assert len(b2.subsystems) == 1
    assert len(b2.subsystems[0].pos_roots) == 4


@pytest.mark.parametrize("label", ["A3", "A4", "B3", "D4", "G2"])
def test_catalog_partitions_pairs(label):
    rs = roots(label)
    seen = {}
    for psi in rs.subsystems:
        vecs = [rs.positives[i] for i in psi.pos_roots]
        assert vector_rank(vecs) == 2
        for i in psi.pos_roots:
            for j in psi.pos_roots:
                if i < j:
                    assert (i, j) not in seen
                    seen[(i, j)] = psi.id
        if psi.commutative:
            a, b = psi.pos_roots
            assert symmetric_form(rs.system, rs.positives[a], rs.positives[b]) == 0
    n = len(rs)
    assert len(seen) == n * (n - 1) // 2
    # maximality: nothing outside the subsystem lies in its span
    for psi in rs.subsystems:
        vecs = [rs.positives[i] for i in psi.pos_roots]
        for k in range(n):
            if k not in psi.pos_roots:
                assert vector_rank(vecs + [rs.positives[k]]) == 3


def test_order_subsystem_a2():
    rs = roots("A2")
    psi = rs.subsystems[0]
    a1, a2, a12 = rid(rs, (1, 0)), rid(rs, (0, 1)), rid(rs, (1, 1))
    assert order_subsystem(rs, (0, 1), psi) == (a1, a12, a2)
    assert order_subsystem(rs, (1, 0), psi) == (a2, a12, a1)


def test_order_subsystem_b2_ends_simple():
    rs = roots("B2")
    order = order_subsystem(rs, (0, 1), rs.subsystems[0])
    assert len(order) == 4
    assert {order[0], order[-1]} == set(rs.simple_indices)


def test_commutative_has_no_order():
    rs = roots("A3")
    psi = next(p for p in rs.subsystems if p.commutative)
    with pytest.raises(ValueError):
        order_subsystem(rs, (0, 1, 2), psi)


def test_rank_two_is_one_subsystem():
    for tag in "ABG":
        rs = generate_positive_roots(build_system(tag, 2))
        assert len(rs.subsystems) == 1
