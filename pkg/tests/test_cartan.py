from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coxchains.cartan import (
    CoxeterError,
    build_system,
    check_coxeter_word,
    euler_form,
    parse_type,
    skew_form,
    symmetric_form,
)

CATALOG = ["A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2", "F4"]


def test_a2_matrix():
    s = build_system("A", 2)
    assert s.cartan == ((2, -1), (-1, 2))
    assert s.coxeter_orders[0][1] == 3
    assert s.simply_laced


@pytest.mark.parametrize("tag, product, m", [("B", 2, 4), ("C", 2, 4), ("G", 3, 6)])
def test_rank_two_products(tag, product, m):
    s = build_system(tag, 2)
    assert s.cartan[0][1] * s.cartan[1][0] == product
    assert s.coxeter_orders[0][1] == m == s.coxeter_orders[1][0]


@pytest.mark.parametrize("label", CATALOG)
def test_cartan_axioms(label):
    s = parse_type(label)
    n = s.rank
    table = {0: 2, 1: 3, 2: 4, 3: 6}
    for i in range(n):
        assert s.cartan[i][i] == 2
        assert s.coxeter_orders[i][i] == 1
        for j in range(n):
            if i == j:
                continue
            assert s.cartan[i][j] <= 0
            assert (s.cartan[i][j] == 0) == (s.cartan[j][i] == 0)
            assert s.symmetrizer[i] * s.cartan[i][j] == s.symmetrizer[j] * s.cartan[j][i]
            assert s.coxeter_orders[i][j] == table[s.cartan[i][j] * s.cartan[j][i]]
            assert s.coxeter_orders[i][j] == s.coxeter_orders[j][i]
    assert min(s.symmetrizer) == 1


def test_symmetric_form_values():
    a2 = build_system("A", 2)
    assert symmetric_form(a2, (1, 0), (0, 1)) == -1
    b2 = build_system("B", 2)
    for s in range(2):
        e = tuple(int(s == t) for t in range(2))
        assert symmetric_form(b2, e, e) == 2 * b2.symmetrizer[s]


def test_dimension_mismatch():
    with pytest.raises(CoxeterError):
        symmetric_form(build_system("A", 2), (1, 0, 0), (0, 1))


@pytest.mark.parametrize("bad", ["X3", "A0", "D3", "G3", "", "A"])
def test_bad_types(bad):
    with pytest.raises(CoxeterError):
        parse_type(bad)


def test_euler_form_a2():
    s = build_system("A", 2)
    a1, a2 = (1, 0), (0, 1)
    assert euler_form(s, (0, 1), a2, a1) == -1
    assert euler_form(s, (0, 1), a1, a2) == 0
    assert euler_form(s, (0, 1), a1, a1) == 1


def test_coxeter_word_check():
    s = build_system("A", 3)
    assert check_coxeter_word(s, [2, 0, 1]) == (2, 0, 1)
    for bad in ([0, 0, 1], [0, 1], [0, 1, 3]):
        with pytest.raises(CoxeterError):
            check_coxeter_word(s, bad)


fractions = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(CATALOG), st.data())
def test_form_identities(label, data):
    s = parse_type(label)
    vec = st.lists(fractions, min_size=s.rank, max_size=s.rank)
    x, y = data.draw(vec), data.draw(vec)
    c = data.draw(st.permutations(range(s.rank)))
    assert symmetric_form(s, x, y) == symmetric_form(s, y, x)
    assert euler_form(s, c, x, y) + euler_form(s, c, y, x) == symmetric_form(s, x, y)
    assert skew_form(s, c, x, x) == 0
    assert skew_form(s, c, x, y) == -skew_form(s, c, y, x)
    assert isinstance(symmetric_form(s, x, y), Fraction)
