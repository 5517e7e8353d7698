from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tuttecov.errors import ParseError
from tuttecov.polynomial import ONE, X, Y, ZERO, TuttePolynomial, evaluate, poly_add, poly_mul

polys = st.dictionaries(
    st.tuples(st.integers(0, 4), st.integers(0, 4)), st.integers(-50, 50), max_size=6
).map(TuttePolynomial)


def test_identities():
    p = X + Y
    assert poly_add(p, ZERO) == p
    assert poly_mul(p, ONE) == p
    assert poly_mul(X, p) == TuttePolynomial({(2, 0): 1, (1, 1): 1})


def test_no_zero_terms_and_order():
    p = TuttePolynomial([((1, 0), 2), ((0, 1), 1), ((1, 0), -2)])
    assert p.terms == (((0, 1), 1),)
    q = TuttePolynomial({(2, 0): 1, (0, 0): 3, (1, 5): 1})
    assert [k for k, _ in q.terms] == [(0, 0), (1, 5), (2, 0)]


def test_str():
    assert str(X * X + X + Y) == "x^2 + x + y"
    assert str(ONE) == "1"
    assert str(ZERO) == "0"
    assert str(TuttePolynomial({(1, 1): 3, (0, 0): -2})) == "3*x*y - 2"


def test_evaluate_exact():
    p = X * X + X + Y
    assert evaluate(p, 1, 1) == 3
    assert evaluate(p, Fraction(1, 2), Fraction(1, 3)) == Fraction(1, 4) + Fraction(1, 2) + Fraction(1, 3)


def test_big_coefficients():
    p = TuttePolynomial({(0, 0): 10**40})
    assert (p * p).coefficient(0, 0) == 10**80


def test_json_roundtrip():
    p = X * X + TuttePolynomial({(0, 3): 10**30})
    data = p.to_json()
    assert data == {"terms": [{"x": 0, "y": 3, "c": str(10**30)}, {"x": 2, "y": 0, "c": "1"}]}
    assert TuttePolynomial.from_json(data) == p
    with pytest.raises(ParseError):
        TuttePolynomial.from_json({"terms": [{"x": 1, "y": 0}]})


@given(polys, polys, polys)
def test_ring_laws(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == ZERO


@given(polys, st.fractions(max_denominator=7), st.fractions(max_denominator=7))
def test_evaluation_is_homomorphism(p, x, y):
    q = p * (X + Y)
    assert q.evaluate(x, y) == p.evaluate(x, y) * (x + y)
    assert p.swap().evaluate(x, y) == p.evaluate(y, x)
