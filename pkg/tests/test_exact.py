from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import F, polys, small_rationals
from orthogf.exact import (
    OrderMismatch,
    PolyX,
    SeriesZ,
    format_rational,
    parse_rational,
    poly_add,
    poly_eval,
    poly_mul,
    series_mul,
    substitute_quadratic,
)


def P(*coeffs):
    return PolyX(tuple(F(c) for c in coeffs))


X = PolyX.x()
ONE = PolyX.const(1)


# -- rationals --------------------------------------------------------------


@pytest.mark.parametrize(
    "text, value",
    [("1/2", F("1/2")), ("-3", F(-3)), ("4/6", F("2/3")), ("+7/1", F(7)), ("0", F(0)), ("-2/4", F("-1/2"))],
)
def test_parse_rational(text, value):
    q = parse_rational(text)
    assert q == value
    assert q.denominator > 0


@pytest.mark.parametrize("bad", ["0.5", "1/0", "x", "", "1//2", "1e3", "1/-2"])
def test_parse_rational_rejects(bad):
    with pytest.raises(ValueError):
        parse_rational(bad)


def test_format_rational():
    assert format_rational(F("-6/4")) == "-3/2"
    assert format_rational(F(5)) == "5"
    assert format_rational(F(0)) == "0"


@given(small_rationals)
def test_rational_string_round_trip(q):
    assert parse_rational(format_rational(q)) == q


# -- polynomials ------------------------------------------------------------


def test_poly_add_examples():
    assert poly_add(P(-1, 0, 1), P(1)) == P(0, 0, 1)
    assert poly_add(X, PolyX()) == X
    assert poly_add(P(0, -3, 0, 1), P(0, 3)) == P(0, 0, 0, 1)


def test_trailing_zeros_trimmed():
    assert P(1, 2, 0, 0).coeffs == (1, 2)
    assert (P(0, 1) - X).is_zero()
    assert PolyX().degree == -1


def test_poly_mul_examples():
    assert poly_mul(P(-1, 1), P(1, 1)) == P(-1, 0, 1)
    assert poly_mul(P(3, 0, 2), ONE) == P(3, 0, 2)
    h = P("-1/2", 0, 1)
    assert poly_mul(h, h) == P("1/4", 0, -1, 0, 1)


def test_poly_eval_examples():
    assert poly_eval(P(-1, 0, 1), F(1)) == 0
    assert poly_eval(P(0, -3, 0, 1), F(2)) == 2
    assert poly_eval(PolyX(), F(5)) == 0


def test_poly_str():
    assert str(P(0, -3, 0, 1)) == "x^3 - 3*x"
    assert str(P("-1/2", 0, 1)) == "x^2 - 1/2"
    assert str(P(0, "-3/4", 0, 1)) == "x^3 - 3/4*x"
    assert str(P(2, -1)) == "-x + 2"
    assert str(PolyX()) == "0"


@given(polys(), polys(), polys())
def test_ring_laws(p, q, r):
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert (p + q) + r == p + (q + r)


@given(polys(), polys())
def test_mul_degree_adds(p, q):
    if not p.is_zero() and not q.is_zero():
        assert (p * q).degree == p.degree + q.degree


@given(polys(), polys(), small_rationals)
def test_eval_is_ring_homomorphism(p, q, x0):
    assert (p * q)(x0) == p(x0) * q(x0)
    assert (p + q)(x0) == p(x0) + q(x0)


@given(polys())
def test_poly_json_round_trip(p):
    assert PolyX.from_json(p.to_json()) == p


# -- series -----------------------------------------------------------------


def S(polys, N):
    return SeriesZ.from_polys([P(*c) if isinstance(c, tuple) else PolyX.const(c) for c in polys], N)


def test_series_mul_examples():
    assert series_mul(S([1, 1], 2), S([1, -1], 2)) == S([1, 0, -1], 2)
    f = SeriesZ(2, (P(1), X, P(0, 0, 1)))
    assert series_mul(f, SeriesZ.one(2)) == f
    geometric = S([1] * 6, 5)
    assert series_mul(geometric, S([1, -1], 5)) == SeriesZ.one(5)


def test_series_order_mismatch():
    with pytest.raises(OrderMismatch):
        series_mul(SeriesZ.one(2), SeriesZ.one(3))
    with pytest.raises(OrderMismatch):
        SeriesZ.one(2) + SeriesZ.one(4)


def test_series_length_invariant():
    with pytest.raises(ValueError):
        SeriesZ(3, (ONE,))


def _binomial_oracle(c, alpha, N):
    """[z^n] of sum_k c_k (xz - alpha z^2)^k by the binomial theorem.

    (xz)^(k-j) (-alpha z^2)^j lands on z^(k+j) with x-degree k-j.
    """
    out = []
    for n in range(N + 1):
        coeffs = [F(0)] * (n + 1)
        for k in range(n + 1):
            j = n - k
            if j > k:
                continue
            coeffs[k - j] += c[k] * comb(k, j) * (-alpha) ** j
        out.append(PolyX(tuple(coeffs)))
    return out


def test_substitute_quadratic_exp():
    c = [F(1), F(1), F("1/2"), F("1/6")]
    s = substitute_quadratic(c, F("1/2"), 3)
    assert s[2] == P("-1/2", 0, "1/2")
    assert s[3] == P(0, "-1/2", 0, "1/6")


def test_substitute_quadratic_constant_f():
    s = substitute_quadratic([1, 0, 0, 0, 0], F(7), 4)
    assert s == SeriesZ.one(4)


def test_substitute_quadratic_geometric():
    s = substitute_quadratic([1, 1, 1], F(1), 2)
    assert s[2] == P(-1, 0, 1)


def test_substitute_quadratic_preconditions():
    with pytest.raises(ValueError):
        substitute_quadratic([1, 1], 1, 3)
    with pytest.raises(ValueError):
        substitute_quadratic([2, 1, 1], 1, 2)


coeff_lists = st.lists(small_rationals, min_size=8, max_size=8).map(lambda cs: [F(1)] + cs)


@settings(max_examples=60)
@given(coeff_lists, small_rationals)
def test_substitute_quadratic_matches_binomial_oracle(c, alpha):
    N = 8
    s = substitute_quadratic(c, alpha, N)
    assert list(s.coeffs) == _binomial_oracle(c, alpha, N)


@settings(max_examples=60)
@given(coeff_lists, small_rationals)
def test_substitute_quadratic_degree_and_parity(c, alpha):
    s = substitute_quadratic(c, alpha, 8)
    assert s[0] == ONE
    for n, p in enumerate(s.coeffs):
        assert p.degree <= n
        if c[n] != 0:
            assert p.degree == n and p.lead == c[n]
        assert all(p.coeff(m) == 0 for m in range(n + 1) if (m - n) % 2)


@given(coeff_lists)
def test_substitute_quadratic_alpha_zero(c):
    s = substitute_quadratic(c, 0, 8)
    assert list(s.coeffs) == [PolyX.monomial(n, c[n]) for n in range(9)]
