from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from perpgf.errors import NonZeroRemainder
from perpgf.poly import (
    ONE,
    ZERO,
    Poly,
    div_one_minus,
    dissect,
    gaussian_poly,
    inflate,
    parse_poly,
    pochhammer,
    poly_add,
    poly_exact_div,
    poly_mul,
    render,
)

coeff_lists = st.lists(st.integers(min_value=-10**6, max_value=10**6), max_size=12)
polys = coeff_lists.map(Poly)
nonzero_polys = polys.filter(lambda p: not p.is_zero())


# canonical form


def test_zero_is_canonical():
    assert Poly([0, 0, 0]) == ZERO
    assert Poly([]).coeffs == ()
    assert ZERO.degree is None


def test_trailing_zeros_trimmed():
    p = Poly([1, 2, 0, 0])
    assert p.coeffs == (1, 2)
    assert p.degree == 1


def test_big_coefficients_stay_exact():
    big = 10**40 + 7
    p = Poly([big, 1]) * Poly([big, -1])
    assert p.coeffs == (big * big, 0, -1)


# small examples


def test_add_examples():
    assert poly_add(Poly([1, 1]), Poly([1, -1])) == Poly([2])
    p = Poly([3, 0, 5])
    assert poly_add(p, ZERO) == p
    assert poly_add(Poly([1, 2]), Poly([0, 3, 4])) == Poly([1, 5, 4])


def test_mul_examples():
    assert poly_mul(Poly([1, 1]), Poly([1, -1])) == Poly([1, 0, -1])
    p = Poly([3, 0, 5])
    assert poly_mul(p, ONE) == p
    assert poly_mul(Poly([1, 1, 1]), Poly([1, -1])) == Poly([1, 0, 0, -1])


def test_exact_div_examples():
    assert poly_exact_div(Poly.one_minus(2), Poly.one_minus(1)) == Poly([1, 1])
    assert poly_exact_div(Poly.one_minus(6), Poly.one_minus(2)) == Poly([1, 0, 1, 0, 1])


def test_exact_div_reports_remainder():
    with pytest.raises(NonZeroRemainder) as info:
        poly_exact_div(Poly([1, 1]), Poly.one_minus(1))
    assert info.value.remainder == Poly([2])


def test_exact_div_by_zero():
    with pytest.raises(ZeroDivisionError):
        poly_exact_div(ONE, ZERO)


def test_div_one_minus_matches_generic_division():
    p = pochhammer(1, 1, 5) * Poly([2, -1, 3])
    for k in range(1, 6):
        assert div_one_minus(p, k) == poly_exact_div(p, Poly.one_minus(k))


def test_pochhammer_examples():
    assert pochhammer(1, 1, 3) == Poly.one_minus(1) * Poly.one_minus(2) * Poly.one_minus(3)
    assert pochhammer(4, 2, 2) == Poly.one_minus(4) * Poly.one_minus(6)
    assert pochhammer(1, 1, 0) == ONE
    assert pochhammer(3, 5, 4).degree == 3 + 8 + 13 + 18


def test_gaussian_examples():
    assert list(gaussian_poly(3, 3)) == [1, 1, 2, 3, 3, 3, 3, 2, 1, 1]
    assert list(gaussian_poly(4, 3)) == [1, 1, 2, 3, 4, 4, 5, 4, 4, 3, 2, 1, 1]
    assert gaussian_poly(0, 9) == ONE
    assert gaussian_poly(4, 1) == Poly([1] * 5)
    assert list(gaussian_poly(4, 2)) == [1, 1, 2, 2, 3, 2, 2, 1, 1]


def test_gaussian_degree_and_positivity():
    for m in range(7):
        for N in range(9):
            g = gaussian_poly(m, N)
            assert g.degree == m * N
            assert all(c > 0 for c in g)


def test_dissect_examples():
    assert dissect(Poly([1, 2, 3, 4]), 2) == Poly([1, 3])
    p = Poly([5, -1, 2])
    assert dissect(p, 1) == p
    assert list(dissect(gaussian_poly(3, 3), 3)) == [1, 3, 3, 1]


def test_render_format():
    assert render(Poly([1, -3, 1])) == "1 - 3*z + 1*z^2"
    assert render(ZERO) == "0"
    assert render(Poly([0, -2])) == "-2*z"


# properties


@settings(max_examples=1000)
@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p + ZERO == p
    assert p * ONE == p
    assert p - p == ZERO


@settings(max_examples=300)
@given(polys, nonzero_polys)
def test_exact_division_round_trip(q, den):
    num = q * den
    assert poly_exact_div(num, den) == q
    assert poly_mul(poly_exact_div(num, den), den) == num


@settings(max_examples=200)
@given(polys, st.integers(min_value=1, max_value=6))
def test_div_one_minus_round_trip(q, k):
    assert div_one_minus(q * Poly.one_minus(k), k) == q


@given(st.integers(min_value=0, max_value=12), st.integers(min_value=0, max_value=12))
def test_gaussian_symmetric_and_reciprocal(m, N):
    g = gaussian_poly(m, N)
    assert g == gaussian_poly(N, m)
    c = list(g)
    assert c == c[::-1]


@given(st.integers(min_value=0, max_value=15), st.integers(min_value=0, max_value=15))
def test_gaussian_value_at_one(m, N):
    assert gaussian_poly(m, N)(1) == comb(N + m, m)


@settings(max_examples=300)
@given(polys, polys, st.integers(min_value=1, max_value=7))
def test_dissect_linear(p, q, s):
    assert dissect(p + q, s) == dissect(p, s) + dissect(q, s)


@settings(max_examples=300)
@given(polys, st.integers(min_value=1, max_value=7))
def test_dissect_then_inflate_keeps_divisible_part(p, s):
    divisible = Poly([c if i % s == 0 else 0 for i, c in enumerate(p)])
    assert inflate(dissect(p, s), s) == divisible
    assert dissect(inflate(p, s), s) == p


@settings(max_examples=300)
@given(polys)
def test_render_parse_round_trip(p):
    assert parse_poly(render(p)) == p
