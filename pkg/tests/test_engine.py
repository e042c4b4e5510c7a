import pytest

from perpgf.engine import (
    RationalGF,
    _even_core,
    _odd_core,
    decompose,
    even_denominator,
    even_modulus,
    expand,
    gf_equal,
    gf_sub,
    numerator_even,
    numerator_odd,
    odd_denominator,
    odd_modulus,
    perp_gf,
)
from perpgf.errors import DenominatorMismatch, NegativeA
from perpgf.partitions import p_bounded
from perpgf.poly import Poly, gaussian_poly

SERIES_4_0 = [1, 1, 3, 5, 8, 12, 18, 24, 33, 43, 55, 69, 86, 104, 126]
SERIES_4_1 = [0, 1, 2, 4, 7, 11, 16, 23, 31, 41, 53, 67, 83, 102, 123]

M3_DEN = [(1, 1), (2, 1), (4, 1)]
M4_DEN = [(1, 2), (2, 1), (3, 1)]


def z(e, c=1):
    return Poly.monomial(e, c)


# closed forms for small m, written out by hand


def closed_m1(A):
    return RationalGF(z(2 * A), [(1, 1)])


def closed_m2(A):
    return RationalGF(z(A), [(1, 1), (2, 1)])


def closed_m3(A):
    a, r = divmod(A, 3)
    if r == 0:
        num = z(2 * a) * (Poly([1, 0, 1, 1]) - z(4 * a + 2))
    elif r == 1:
        num = z(2 * a + 1) * (Poly([1, 1, 0, 1]) - z(4 * a + 3))
    else:
        num = z(2 * a + 2) * (Poly([1, 1, 1]) - z(4 * a + 4))
    return RationalGF(num, M3_DEN)


def closed_m4(A):
    # the odd branch is the case A = 2a + 1
    a, r = divmod(A, 2)
    if r == 0:
        num = z(a) * (Poly([1, 0, 1]) - z(a + 1))
    else:
        num = z(a + 1) * (Poly([1, 1]) - z(a + 1))
    return RationalGF(num, M4_DEN)


def oracle_series(m, A, terms):
    return [p_bounded(m * N // 2 - A, m, N) for N in range(terms)]


# RationalGF basics


def test_expand_examples():
    assert expand(RationalGF([1], [(1, 1)]), 5) == [1] * 5
    assert expand(RationalGF([1], [(2, 1)]), 6) == [1, 0, 1, 0, 1, 0]


def test_expand_rejects_nonpositive_terms():
    with pytest.raises(ValueError):
        expand(RationalGF([1], [(1, 1)]), 0)


def test_gf_equal_examples():
    g1 = RationalGF(z(1), [(2, 1)])
    g2 = RationalGF(z(1) * Poly.one_minus(1), [(1, 1), (2, 1)])
    assert gf_equal(g1, g2)
    assert g1 == g2
    assert not gf_equal(RationalGF([1], [(1, 1)]), RationalGF([1], [(2, 1)]))


def test_denominator_normalized():
    g = RationalGF([1], [(2, 1), (1, 1), (2, 1)])
    assert g.denominator == ((1, 1), (2, 2))
    assert g.factor_count == 3
    assert g.denominator_degree == 5


def test_gf_sub_examples():
    d = expand(gf_sub(perp_gf(4, 0), perp_gf(4, 1)), 8)
    assert d == [1, 0, 1, 1, 1, 1, 2, 1]
    g = perp_gf(5, 3)
    assert (g - g).numerator.is_zero()
    assert expand(gf_sub(perp_gf(4, 1), perp_gf(4, 2)), 60) == [0] * 60


def test_gf_sub_needs_same_denominator():
    with pytest.raises(DenominatorMismatch):
        gf_sub(perp_gf(4, 0), perp_gf(3, 0))


# decomposition


def test_moduli():
    assert [even_modulus(M) for M in range(1, 6)] == [1, 2, 6, 12, 60]
    assert [odd_modulus(M) for M in range(1, 6)] == [1, 3, 15, 105, 315]


def test_decompose_examples():
    i = decompose(4, 7)
    assert (i.M, i.modulus, i.a, i.r) == (2, 2, 3, 1)
    i = decompose(5, 16)
    assert (i.M, i.modulus, i.a, i.r) == (3, 15, 1, 1)
    i = decompose(6, 0)
    assert (i.M, i.modulus, i.a, i.r) == (3, 6, 0, 0)
    with pytest.raises(NegativeA):
        decompose(4, -1)


def test_denominators():
    assert even_denominator(2) == ((1, 1), (2, 2), (3, 1))
    assert odd_denominator(3) == ((1, 1), (2, 1), (4, 1), (6, 1), (8, 1))


def test_decomposition_consistency():
    # (a, r + modulus) and (a + 1, r) describe the same offset
    for m in range(1, 9):
        M = m // 2 if m % 2 == 0 else (m + 1) // 2
        mod = even_modulus(M) if m % 2 == 0 else odd_modulus(M)
        num = numerator_even if m % 2 == 0 else numerator_odd
        den = even_denominator(M) if m % 2 == 0 else odd_denominator(M)
        for a in range(3):
            for r in range(mod):
                g1 = RationalGF(num(M, a, r + mod), den)
                g2 = RationalGF(num(M, a + 1, r), den)
                assert gf_equal(g1, g2), (m, a, r)


# closed forms and published series


def test_published_series():
    assert expand(perp_gf(4, 0), 15) == SERIES_4_0
    assert expand(perp_gf(4, 1), 15) == SERIES_4_1
    assert expand(RationalGF(numerator_even(2, 0, 0), even_denominator(2)), 15) == SERIES_4_0


@pytest.mark.parametrize("A", range(21))
def test_closed_forms_m1_m2(A):
    assert gf_equal(perp_gf(1, A), closed_m1(A))
    assert gf_equal(perp_gf(2, A), closed_m2(A))
    assert gf_equal(RationalGF(numerator_odd(1, 0, A), odd_denominator(1)), closed_m1(A))
    assert gf_equal(RationalGF(numerator_even(1, 0, A), even_denominator(1)), closed_m2(A))


@pytest.mark.parametrize("a", range(6))
def test_closed_forms_m3_m4(a):
    for A in (3 * a, 3 * a + 1, 3 * a + 2):
        assert gf_equal(perp_gf(3, A), closed_m3(A))
    for A in (2 * a, 2 * a + 1):
        assert gf_equal(perp_gf(4, A), closed_m4(A))


def test_numerator_even_matches_m4_closed_form():
    g = RationalGF(numerator_even(2, 0, 0), even_denominator(2))
    assert gf_equal(g, RationalGF(Poly([1, -1, 1]), M4_DEN))


def test_perp_zero_offset_starts_at_one():
    for m in range(1, 9):
        assert expand(perp_gf(m, 0), 1) == [1]


def test_negative_offset():
    for A in range(1, 8):
        assert gf_equal(perp_gf(6, -A), perp_gf(6, A))
    with pytest.raises(NegativeA):
        perp_gf(5, -1)


def test_long_series_against_oracle():
    assert expand(perp_gf(3, 0), 200) == oracle_series(3, 0, 200)


def test_oracle_agreement_small():
    for m in range(1, 9):
        for A in range(0, 4 * m + 1):
            assert expand(perp_gf(m, A), 25) == oracle_series(m, A, 25), (m, A)


def test_vanishing_beyond_range():
    for m in range(1, 8):
        for A in (5, 17, 40):
            s = expand(perp_gf(m, A), 40)
            assert all(s[N] == 0 for N in range(40) if m * N // 2 < A)


def test_cores_are_polynomials():
    # the quotients inside the dissections divide exactly; construction raises otherwise
    for M in range(1, 7):
        for j in range(1, M + 1):
            assert _even_core(M, j).degree is not None
            assert _odd_core(M, j).degree is not None


def test_shifted_cores_divide_for_all_offsets():
    for M in range(1, 7):
        for a in range(4):
            for r in range(even_modulus(M)):
                numerator_even(M, a, r)
            for r in range(odd_modulus(M)):
                numerator_odd(M, a, r)


def test_column_reconstruction_even():
    for m in (2, 4, 6):
        for N in range(12):
            c = m * N // 2
            coeffs = [expand(perp_gf(m, c - n), N + 1)[N] for n in range(m * N + 1)]
            assert coeffs == list(gaussian_poly(m, N))


def test_column_reconstruction_odd():
    # left half from the GF, right half by reflection
    for m in (1, 3, 5, 7):
        for N in range(12):
            c = m * N // 2
            g = gaussian_poly(m, N)
            for A in range(c + 1):
                v = expand(perp_gf(m, A), N + 1)[N]
                assert v == g[c - A]
                mirror = c + A if (m * N) % 2 == 0 else c + A + 1
                assert v == p_bounded(mirror, m, N)
