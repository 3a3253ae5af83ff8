from decimal import Decimal, getcontext

import pytest
from hypothesis import given, strategies as st

from torusorders.quadfield import (FieldMismatchError, MonodromyError, QuadNum, eigen_data,
                                   is_square, qn_arith, qn_sign)

getcontext().prec = 80

ints = st.integers(-10 ** 6, 10 ** 6)
nonsquare = st.integers(2, 500).filter(lambda d: not is_square(d))


def decimal_value(x: QuadNum) -> Decimal:
    return (Decimal(x.p) + Decimal(x.q) * Decimal(x.D).sqrt()) / Decimal(x.r)


def test_examples():
    lam, mu = QuadNum(3, 1, 2, 5), QuadNum(3, -1, 2, 5)
    assert qn_arith("mul", lam, mu) == 1
    x = QuadNum(7, -2, 3, 5)
    assert qn_arith("add", x, QuadNum(0, D=5)) == x
    assert qn_arith("sub", x, x).is_zero()
    assert qn_sign(QuadNum(0, 1, 1, 5)) == 1
    assert qn_sign(QuadNum(3, -1, 2, 5)) == 1
    assert qn_sign(QuadNum(1, -1, 1, 2)) == -1


def test_normalization_and_printing():
    x = QuadNum(6, -4, -2, 5)
    assert (x.p, x.q, x.r) == (-3, 2, 1)
    assert str(QuadNum(-1, 1, 2, 5)) == "(-1 + 1*sqrt(5))/2"
    assert str(QuadNum(3, -1, 2, 5)) == "(3 - 1*sqrt(5))/2"


def test_errors():
    with pytest.raises(ValueError):
        QuadNum(1, 1, 1, 4)
    with pytest.raises(ZeroDivisionError):
        QuadNum(1, 0, 0, 5)
    with pytest.raises(ZeroDivisionError):
        QuadNum(1, 0, 1, 5) / QuadNum(0, 0, 1, 5)
    with pytest.raises(FieldMismatchError):
        qn_arith("add", QuadNum(1, 1, 1, 5), QuadNum(1, 1, 1, 2))


@given(ints, ints, st.integers(1, 1000), nonsquare)
def test_sign_matches_high_precision(p, q, r, D):
    x = QuadNum(p, q, r, D)
    d = decimal_value(x)
    assert x.sign() == (d > 0) - (d < 0)


@given(ints, ints, st.integers(1, 50), ints, ints, st.integers(1, 50), nonsquare)
def test_field_laws(p1, q1, r1, p2, q2, r2, D):
    x, y = QuadNum(p1, q1, r1, D), QuadNum(p2, q2, r2, D)
    assert x + y == y + x
    assert x * y == y * x
    assert (x - y) + y == x
    if not y.is_zero():
        assert (x / y) * y == x
    tol = Decimal(10) ** -40 * (1 + abs(decimal_value(x)) * abs(decimal_value(y)))
    assert abs(decimal_value(x * y) - decimal_value(x) * decimal_value(y)) < tol


@given(ints, ints, nonsquare)
def test_conjugate_norm(p, q, D):
    x = QuadNum(p, q, 1, D)
    assert x * x.conjugate() == x.norm_numerator()


def solve_eigen_oracle(A):
    # independent derivation: characteristic polynomial, then (A - lam I) v = 0
    (a, b), (c, d) = A
    t = a + d
    D = t * t - 4
    lam = QuadNum(t, 1, 2, D)
    return D, lam, (lam - a) / b


@pytest.mark.parametrize("A", [((2, 1), (1, 1)), ((3, 1), (2, 1)), ((2, 3), (1, 2)),
                               ((5, 2), (2, 1)), ((1, 1), (1, 2))])
def test_eigen_data(A):
    e = eigen_data(A)
    D, lam, v1 = solve_eigen_oracle(A)
    assert (e.D, e.lam) == (D, lam)
    assert e.e_lambda == (1, v1)
    (a, b), (c, d) = A
    for ev, vec in ((e.lam, e.e_lambda), (e.mu, e.e_mu)):
        assert a * vec[0] + b * vec[1] == ev * vec[0]
        assert c * vec[0] + d * vec[1] == ev * vec[1]
    # change_of_basis inverts the eigenvector matrix
    cols = (e.e_lambda, e.e_mu)
    for i, row in enumerate(e.change_of_basis):
        for j, col in enumerate(cols):
            assert row[0] * col[0] + row[1] * col[1] == (1 if i == j else 0)


def test_figure_eight_eigen():
    e = eigen_data(((2, 1), (1, 1)))
    assert e.D == 5
    assert e.lam == QuadNum(3, 1, 2, 5)
    assert e.e_lambda == (1, QuadNum(-1, 1, 2, 5))


@pytest.mark.parametrize("A", [((1, 1), (0, 1)), ((0, -1), (1, 0)), ((-2, -1), (-1, -1)),
                               ((2, 0), (0, 1))])
def test_eigen_data_rejects(A):
    with pytest.raises(MonodromyError):
        eigen_data(A)


@pytest.mark.parametrize("choice", ["+lambda", "-lambda", "+mu", "-mu"])
def test_functional_is_positive_multiple(choice):
    e = eigen_data(((2, 1), (1, 1)))
    (P1, Q1), (P2, Q2) = e.functional(choice)
    for v in [(1, 0), (0, 1), (3, -5), (-2, 7), (1, 1)]:
        exact = e.coordinate(choice, v)
        scaled = QuadNum(v[0] * P1 + v[1] * P2, v[0] * Q1 + v[1] * Q2, 1, 5)
        assert exact.sign() == scaled.sign()
        if not exact.is_zero():
            ratio = scaled / exact
            assert ratio.q == 0 and ratio.p > 0
