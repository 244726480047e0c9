from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from catconv.core import (
    DomainError,
    average_cycles_closed,
    binomial,
    catalan,
    convolution_lhs,
    convolution_rhs,
    diagonal_recurrence_sides,
    f_closed,
    lemma_pq_sum,
    segner_sum,
    weighted_catalan_sum,
)
from oracles import convolution_literal, pascal, segner_catalans

SEGNER = segner_catalans(60)
PASCAL = pascal(60)


@pytest.mark.parametrize("n, expected", [(-1, 0), (-7, 0), (0, 1), (5, 42)])
def test_catalan_examples(n, expected):
    assert catalan(n) == expected


def test_catalan_matches_segner_recurrence():
    assert [catalan(n) for n in range(61)] == SEGNER


@pytest.mark.parametrize("n, k, expected", [(4, 2, 6), (18, 11, 31824), (5, -1, 0), (5, 6, 0), (0, 0, 1)])
def test_binomial_examples(n, k, expected):
    assert binomial(n, k) == expected


def test_binomial_matches_pascal():
    for n in range(61):
        for k in range(n + 1):
            assert binomial(n, k) == PASCAL[n][k]


def test_binomial_rejects_negative_top():
    with pytest.raises(DomainError):
        binomial(-1, 0)


@pytest.mark.parametrize("k", range(3, 12))
def test_f_closed_diagonal_is_one(k):
    assert f_closed(k, k) == 1


def test_f_closed_examples():
    assert f_closed(4, 5) == 5
    assert f_closed(5, 12) == 31824


@pytest.mark.parametrize("k, n", [(2, 5), (6, 5), (0, 0)])
def test_f_closed_domain(k, n):
    with pytest.raises(DomainError):
        f_closed(k, n)


@pytest.mark.parametrize("k, n, expected", [(2, 3, 2), (1, 4, 5), (3, 3, 1), (7, 7, 1)])
def test_convolution_lhs_examples(k, n, expected):
    assert convolution_lhs(k, n) == expected


def test_convolution_lhs_matches_literal_compositions():
    for n in range(1, 11):
        for k in range(1, n + 1):
            assert convolution_lhs(k, n) == convolution_literal(k, n), (k, n)


@pytest.mark.parametrize("k, n, expected", [(2, 3, 2), (3, 3, 1), (1, 3, 2)])
def test_convolution_rhs_examples(k, n, expected):
    assert convolution_rhs(k, n) == expected


@pytest.mark.parametrize("fn", [convolution_lhs, convolution_rhs])
@pytest.mark.parametrize("k, n", [(0, 3), (4, 3), (-1, 2)])
def test_convolution_domain(fn, k, n):
    with pytest.raises(DomainError):
        fn(k, n)


def test_exact_division_property():
    for n in range(1, 15):
        for k in range(1, n + 1):
            assert (k * binomial(2 * n - k, n)) % (2 * n - k) == 0


@pytest.mark.parametrize("n, expected", [(1, 1), (2, 5), (3, 21)])
def test_weighted_sum_examples(n, expected):
    assert weighted_catalan_sum(n) == expected


def test_weighted_sum_domain():
    with pytest.raises(DomainError):
        weighted_catalan_sum(0)


def test_segner_sum():
    for n in range(51):
        assert segner_sum(n) == catalan(n + 1)


@pytest.mark.parametrize("p, q, expected", [(1, 1, 1), (2, 2, 1), (9, 9, 1), (3, 2, 3)])
def test_lemma_pq_examples(p, q, expected):
    assert lemma_pq_sum(p, q) == expected


@pytest.mark.parametrize("p, q", [(0, 1), (4, 2), (1, 2), (3, 0)])
def test_lemma_pq_domain(p, q):
    with pytest.raises(DomainError):
        lemma_pq_sum(p, q)


@pytest.mark.parametrize("k, n, expected", [(3, 4, Fraction(2)), (5, 6, Fraction(15, 7)), (4, 5, Fraction(2))])
def test_average_cycles_closed_examples(k, n, expected):
    assert average_cycles_closed(k, n) == expected


@pytest.mark.parametrize("k, n", [(3, 3), (2, 5), (6, 6)])
def test_average_cycles_domain(k, n):
    with pytest.raises(DomainError):
        average_cycles_closed(k, n)


def test_recurrence_empty_sum_at_k_equals_n():
    assert diagonal_recurrence_sides(3, 3) == (0, 0)


def test_marked_triangle_reading():
    for n in range(4, 13):
        assert f_closed(3, n) == (n - 2) * catalan(n - 2)


@given(st.integers(3, 40), st.integers(0, 40))
def test_ratio_in_lowest_terms(k, extra):
    n = k + 1 + extra
    r = average_cycles_closed(k, n)
    from math import gcd
    assert gcd(r.numerator, r.denominator) == 1 and r.denominator >= 1


@given(st.integers(1, 60), st.data())
def test_convolution_sides_agree(n, data):
    k = data.draw(st.integers(1, n))
    assert convolution_lhs(k, n) == convolution_rhs(k, n)
