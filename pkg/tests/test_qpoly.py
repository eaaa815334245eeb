import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rinctab import DivisibilityError, InputError, Partition, QPoly
from rinctab.qpoly import (
    catalan,
    count_r,
    count_s,
    exact_div,
    formula_Cq,
    formula_Ctq,
    formula_Rq,
    formula_Rtq,
    formula_Sq,
    hook_lengths,
    poly_sum,
    q_binomial,
    q_factorial,
    q_hook_maj_sum,
    q_int,
    recurrence_rhs_Rq,
)
from rinctab.tableaux import enumerate_syt

from oracles import subset_sum_qbinomial


def P(*coeffs):
    return QPoly(coeffs)


def test_arithmetic_basics():
    a, b = P(1, 1), P(0, 1, 2)
    assert a + b == P(1, 2, 2)
    assert a - a == QPoly()
    assert a * b == P(0, 1, 3, 2)
    assert (a * 3) == P(3, 3)
    assert P(0, 0, 0) == QPoly() and QPoly().degree == -1
    assert P(1, 2, 3)(1) == 6 and P(1, 2, 3)(2) == 17
    assert P(1, 1).shift(2) == P(0, 0, 1, 1)


def test_human_and_json_format():
    assert P(0, 0, 1, 0, 1).human() == "q^2 + q^4"
    assert P(1, -1, 0, 2).human() == "1 - q + 2q^3"
    assert P(-3).human() == "-3"
    assert QPoly().human() == "0"
    assert P(0, 1, 1, 1).to_json() == '{"coeffs": [0, 1, 1, 1]}'
    assert QPoly.from_json(P(4, 0, 1).to_json()) == P(4, 0, 1)


def test_q_int():
    assert q_int(0) == QPoly()
    assert q_int(1) == P(1)
    assert q_int(2) == P(1, 1)
    assert q_int(5) == P(1, 1, 1, 1, 1)
    with pytest.raises(InputError):
        q_int(-1)


def test_q_binomial_examples():
    assert q_binomial(4, 2) == P(1, 1, 2, 1, 1)
    assert q_binomial(7, 0) == P(1)
    assert q_binomial(3, 1) == q_int(3)
    assert q_binomial(3, 4) == QPoly()
    assert q_binomial(3, -1) == QPoly()


@pytest.mark.parametrize("a", range(0, 11))
def test_q_binomial_against_subset_sums(a):
    for b in range(-1, a + 2):
        assert list(q_binomial(a, b).coeffs) == subset_sum_qbinomial(a, b)
        assert q_binomial(a, b)(1) == (math.comb(a, b) if 0 <= b <= a else 0)


@pytest.mark.parametrize("a", range(0, 12))
def test_q_binomial_symmetry(a):
    for b in range(a + 1):
        coeffs = q_binomial(a, b).coeffs
        assert q_binomial(a, b) == q_binomial(a, a - b)
        assert coeffs == coeffs[::-1]


def test_q_factorial():
    assert q_factorial(0) == P(1)
    assert q_factorial(2) == P(1, 1)
    assert q_factorial(3) == P(1, 2, 2, 1)


def test_exact_div_examples():
    assert exact_div(P(0, 1, 1), P(1, 1)) == P(0, 1)
    assert exact_div(q_int(4) * q_int(3), q_int(2) * q_int(1)) == q_binomial(4, 2)
    with pytest.raises(DivisibilityError):
        exact_div(P(1, 1), P(1, 1, 1))
    with pytest.raises(ZeroDivisionError):
        exact_div(P(1), QPoly())


small_polys = st.lists(st.integers(-20, 20), max_size=8).map(QPoly)


@settings(max_examples=300, deadline=None)
@given(small_polys, small_polys.filter(bool))
def test_exact_div_round_trip(x, y):
    assert exact_div(x * y, y) == x


@settings(max_examples=100, deadline=None)
@given(small_polys, small_polys, small_polys)
def test_ring_laws(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert (a * b)(3) == a(3) * b(3)


def test_hook_lengths():
    assert sorted(hook_lengths(Partition((2, 2)))) == [1, 2, 2, 3]
    assert hook_lengths(Partition((1,))) == [1]
    assert sorted(hook_lengths(Partition((2, 2, 1)))) == [1, 1, 2, 3, 4]


def test_hook_formula_examples():
    assert q_hook_maj_sum(Partition((2, 2))) == P(0, 0, 1, 0, 1)
    assert q_hook_maj_sum(Partition((1,))) == P(1)
    assert q_hook_maj_sum(Partition((2, 2, 1))) == q_int(5).shift(4)


@pytest.mark.parametrize("parts", [(3, 2), (3, 3), (2, 2, 2), (4, 2, 1), (3, 1, 1, 1), (5,)])
def test_hook_formula_against_syt(parts):
    shape = Partition(parts)
    assert q_hook_maj_sum(shape) == poly_sum(t.maj() for t in enumerate_syt(shape))


def test_formula_examples():
    assert formula_Cq(2) == P(0, 0, 1, 0, 1)
    assert formula_Rq(2, 1) == P(0, 1, 1, 1)
    assert formula_Rtq(2, 1) == P(1, 1, 1)
    assert formula_Sq(3, 1) == q_int(5).shift(4)
    for n in range(1, 9):
        assert formula_Rq(n, n) == QPoly.monomial(n * (n - 1) // 2)


# brute-force sums (see tests/oracles.py), frozen
FROZEN_RQ = {
    (3, 1): [0, 0, 1, 1, 2, 2, 2, 1, 1],
    (3, 2): [0, 0, 1, 1, 2, 1, 1],
    (4, 1): [0, 0, 0, 1, 1, 2, 3, 4, 4, 5, 4, 4, 3, 2, 1, 1],
    (4, 2): [0, 0, 0, 1, 1, 3, 3, 5, 4, 5, 3, 3, 1, 1],
}
FROZEN_RTQ = {
    (3, 2): [0, 1, 1, 2, 1, 1],
    (4, 1): [1, 1, 2, 3, 4, 4, 5, 4, 4, 3, 2, 1, 1],
    (4, 2): [0, 1, 1, 3, 3, 5, 4, 5, 3, 3, 1, 1],
}
FROZEN_SQ = {
    (4, 1): [0, 0, 0, 0, 0, 1, 1, 2, 2, 3, 3, 3, 2, 2, 1, 1],
    (4, 2): [0, 0, 0, 0, 0, 0, 0, 1, 1, 2, 1, 2, 1, 1],
}


@pytest.mark.parametrize("nk, coeffs", FROZEN_RQ.items())
def test_formula_Rq_frozen(nk, coeffs):
    assert formula_Rq(*nk) == QPoly(coeffs)


@pytest.mark.parametrize("nk, coeffs", FROZEN_RTQ.items())
def test_formula_Rtq_frozen(nk, coeffs):
    assert formula_Rtq(*nk) == QPoly(coeffs)


@pytest.mark.parametrize("nk, coeffs", FROZEN_SQ.items())
def test_formula_Sq_frozen(nk, coeffs):
    assert formula_Sq(*nk) == QPoly(coeffs)


def test_out_of_range_formulas_vanish():
    assert formula_Sq(4, 4) == QPoly()
    assert formula_Sq(4, -1) == QPoly()
    assert formula_Rq(3, 4) == QPoly()
    assert formula_Rtq(3, -2) == QPoly()
    with pytest.raises(InputError):
        formula_Rq(0, 0)


@pytest.mark.parametrize("n", range(1, 9))
def test_formulas_at_one_match_counts(n):
    assert formula_Cq(n)(1) == catalan(n)
    assert formula_Ctq(n)(1) == catalan(n)
    assert formula_Sq(n, 0) == formula_Cq(n)
    assert formula_Rtq(n, 0) == formula_Ctq(n)
    for k in range(n + 1):
        assert formula_Rq(n, k)(1) == count_r(n, k)
        assert formula_Rtq(n, k)(1) == count_r(n, k)
        assert formula_Sq(n, k)(1) == count_s(n, k)
        assert formula_Rq(n, k) == formula_Rtq(n, k).shift(n - k)
    assert q_hook_maj_sum(Partition((n, n))) == formula_Cq(n)


def test_counts():
    assert count_r(2, 1) == 3
    assert count_s(3, 1) == 5
    assert count_r(3, 1) == 10
    assert [count_s(n, 0) for n in range(1, 7)] == [1, 2, 5, 14, 42, 132]
    assert count_s(3, 3) == 0 and count_r(3, 4) == 0 and count_r(3, -1) == 0


def test_recurrence_examples():
    assert recurrence_rhs_Rq(2, 1) == P(0, 1, 1, 1)
    assert recurrence_rhs_Rq(3, 1) == QPoly(FROZEN_RQ[(3, 1)])
    assert recurrence_rhs_Rq(3, 2) == formula_Rq(3, 2)
    with pytest.raises(InputError):
        recurrence_rhs_Rq(3, 0)
    with pytest.raises(InputError):
        recurrence_rhs_Rq(3, 3)


def test_qpoly_is_immutable():
    p = P(1, 2)
    with pytest.raises(AttributeError):
        p.coeffs = (3,)
