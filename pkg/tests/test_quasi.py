from fractions import Fraction

import pytest

from perpgf.engine import RationalGF, expand, perp_gf
from perpgf.identities import interpolate, quasipolynomial_extract

P3 = RationalGF([1], [(1, 1), (2, 1), (3, 1)])

# p(6k + i, 3) for i = 0..5, coefficients lowest first in k
P3_CONSTITUENTS = [
    (1, 3, 3),
    (1, 4, 3),
    (2, 5, 3),
    (3, 6, 3),
    (4, 7, 3),
    (5, 8, 3),
]


def test_interpolate_recovers_polynomial():
    xs = [2, 3, 5, 7]
    ys = [x**3 - 2 * x + 5 for x in xs]
    assert interpolate(xs, ys) == (5, -2, 0, 1)


def test_interpolate_is_exact():
    coeffs = interpolate([0, 1, 2], [0, 1, 3])
    assert coeffs == (Fraction(0), Fraction(1, 2), Fraction(1, 2))
    assert all(isinstance(c, Fraction) for c in coeffs)


def test_p3_constituents():
    qp = quasipolynomial_extract(P3)
    assert qp.period == 6
    assert qp.valid_from == 0
    assert [tuple(c) for c in qp.constituents] == P3_CONSTITUENTS
    assert all(qp.degree(i) == 2 for i in range(6))


def test_p3_n_form():
    qp = quasipolynomial_extract(P3)
    # (n^2 + 6n + 12)/12 for n = 6k
    assert qp.n_form(0) == (1, Fraction(1, 2), Fraction(1, 12))


def test_geometric_series():
    qp = quasipolynomial_extract(RationalGF([1], [(1, 1)]))
    assert qp.period == 1
    assert qp.constituents == ((1,),)
    assert qp(1000) == 1


def test_multiplicity_raises_degree_not_period():
    qp = quasipolynomial_extract(RationalGF([1], [(2, 3)]))
    assert qp.period == 2
    assert qp.degree(0) == 2
    assert qp.constituents[1] == ()


def test_empty_denominator_rejected():
    with pytest.raises(ValueError):
        quasipolynomial_extract(RationalGF([1, 2], []))


def test_valid_from_respects_numerator():
    # 1 + z^5 over (1 - z): the values are 1,1,1,1,1,2,2,...
    qp = quasipolynomial_extract(RationalGF([1, 0, 0, 0, 0, 1], [(1, 1)]))
    assert qp.valid_from == 5
    assert qp(4) == 2 and expand(RationalGF([1, 0, 0, 0, 0, 1], [(1, 1)]), 5)[4] == 1


@pytest.mark.parametrize("m", range(1, 7))
def test_perp_gf_quasipolynomial_predicts(m):
    for A in range(11):
        gf = perp_gf(m, A)
        qp = quasipolynomial_extract(gf)
        start = qp.valid_from
        series = expand(gf, start + 51)
        assert all(qp(N) == series[N] for N in range(start, start + 51)), (m, A)
        assert all(qp.degree(i) < gf.factor_count for i in range(qp.period))


def test_central_periods():
    periods = [quasipolynomial_extract(perp_gf(m, 0)).period for m in range(1, 7)]
    assert periods == [1, 2, 4, 6, 24, 60]
