from hypothesis import given
from hypothesis import strategies as st

from gdcalc.polynomial import ONE, ZERO, Z, IntPolynomial

polys = st.dictionaries(st.integers(0, 6), st.integers(-20, 20), max_size=5).map(IntPolynomial)


def test_zero_coefficients_dropped():
    p = IntPolynomial({0: 1, 2: 0, 3: -2})
    assert p.coefficients == {0: 1, 3: -2}
    assert p.degree == 3
    assert p[2] == 0 and p[7] == 0


def test_zero_polynomial():
    assert not ZERO
    assert ZERO.degree == -1
    assert ZERO == 0
    assert IntPolynomial([0, 0]) == ZERO


def test_from_sequence_and_monomial():
    assert IntPolynomial([1, 0, 1]) == ONE + Z * Z
    assert IntPolynomial.monomial(4, -3) == IntPolynomial({4: -3})


def test_json_uses_string_keys():
    p = IntPolynomial({0: 1, 2: 1})
    assert p.to_json() == {"0": 1, "2": 1}
    assert IntPolynomial.from_json({"0": 1, "2": 1}) == p


def test_str():
    assert str(IntPolynomial({0: 1, 2: -2, 4: 1})) == "1 - 2z^2 + z^4"


def test_shift():
    assert IntPolynomial([1, 2]).shift(2) == IntPolynomial({2: 1, 3: 2})


@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == ZERO
    assert p * ONE == p


@given(polys)
def test_json_round_trip(p):
    assert IntPolynomial.from_json(p.to_json()) == p
    assert hash(IntPolynomial.from_json(p.to_json())) == hash(p)


@given(polys, polys)
def test_degree_of_product(p, q):
    if p and q:
        assert (p * q).degree == p.degree + q.degree
