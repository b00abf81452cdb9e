import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qo_invariants import InvalidInputError, Mat2, SingularSwapError, lcm, reduce, sw
from qo_invariants.exact_core import unimodular_completion


def brute_completion(m, n):
    for s in range(0, m * n + 2):
        if (m * s - 1) % n == 0 and (m * s - 1) // n >= 0:
            return (m * s - 1) // n, s
    raise AssertionError("no completion found")


@pytest.mark.parametrize("num, den, expected", [
    (4, 10, Fraction(2, 5)),
    (2, 7, Fraction(2, 7)),
    (-3, -6, Fraction(1, 2)),
    (3, -6, Fraction(-1, 2)),
])
def test_reduce(num, den, expected):
    q = reduce(num, den)
    assert q == expected
    assert q.denominator > 0 and math.gcd(q.numerator, q.denominator) == 1


def test_reduce_zero_denominator():
    with pytest.raises(InvalidInputError) as info:
        reduce(1, 0)
    assert info.value.code == "zero-denominator"


@given(st.integers(-10**30, 10**30), st.integers(1, 10**30))
def test_reduce_idempotent(p, q):
    once = reduce(p, q)
    twice = reduce(once.numerator, once.denominator)
    assert (twice.numerator, twice.denominator) == (once.numerator, once.denominator)


@pytest.mark.parametrize("a, b, expected", [(7, 5, 35), (2, 1, 2), (1, 1, 1), (4, 6, 12)])
def test_lcm(a, b, expected):
    assert lcm(a, b) == expected


def test_lcm_rejects_zero():
    with pytest.raises(InvalidInputError):
        lcm(0, 3)


@pytest.mark.parametrize("m, n, expected", [(5, 4, (1, 1)), (7, 2, (3, 1)), (1, 1, (0, 1))])
def test_unimodular_completion_examples(m, n, expected):
    assert brute_completion(m, n) == expected
    assert unimodular_completion(m, n) == expected


def test_unimodular_completion_matches_brute_force():
    for m in range(1, 51):
        for n in range(1, 51):
            if math.gcd(m, n) != 1:
                continue
            r, s = unimodular_completion(m, n)
            assert (r, s) == brute_completion(m, n)
            assert m * s - n * r == 1
            if m >= 2:
                assert 0 <= r < m


def test_unimodular_completion_not_coprime():
    with pytest.raises(InvalidInputError) as info:
        unimodular_completion(4, 6)
    assert info.value.code == "not-coprime"


def test_sw_examples():
    assert sw(Mat2.from_rows([[1, 2], [12, 1]])) == Mat2.from_rows([[-23, 2], [-12, 1]])
    assert sw(Mat2.from_rows([[1, 4], [993, 1]])) == Mat2.from_rows([[-3971, 4], [-993, 1]])
    assert sw(Mat2.identity()) == Mat2.identity()


def test_sw_singular():
    with pytest.raises(SingularSwapError):
        sw(Mat2.from_rows([[1, 2], [3, 0]]))


rationals = st.fractions(min_value=-50, max_value=50, max_denominator=20)
matrices = st.builds(Mat2, rationals, rationals, rationals,
                     rationals.filter(lambda x: x != 0))


@given(matrices)
def test_sw_involution_and_determinant(U):
    V = sw(U)
    assert sw(V) == U
    assert V.det == U.a11 / U.a22
    assert (V.det == 1) == (U.a11 == U.a22)


@given(matrices, rationals, rationals)
def test_sw_exchanges_relation(U, x2, y1):
    # [x1; y2] = U [x2; y1]  implies  [x1; y1] = sw(U) [x2; y2]
    x1, y2 = U.apply(x2, y1)
    assert sw(U).apply(x2, y2) == (x1, y1)
