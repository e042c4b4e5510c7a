"""Unimodality of Gaussian polynomials and nonnegativity of difference series."""

from __future__ import annotations

from ..engine import expand, gf_sub, perp_gf
from ..partitions import is_unimodal
from ..poly import gaussian_poly
from .report import IdentityReport, make_report


def check_unimodality(m: int, N_max: int) -> IdentityReport:
    checked = 0
    for N in range(N_max + 1):
        coeffs = list(gaussian_poly(m, N))
        checked += 1
        if not is_unimodal(coeffs):
            return make_report(
                f"unimodal-m{m}", f"N <= {N_max}",
                {"m": m, "N": N, "coefficients": coeffs}, checked,
            )
    return make_report(f"unimodal-m{m}", f"N <= {N_max}", checked=checked)


def difference_series(m: int, A: int, terms: int) -> list:
    """Coefficients of ``sum_N [p(c-A) - p(c-A-1)] z^N`` with ``c = floor(mN/2)``."""
    return expand(gf_sub(perp_gf(m, A), perp_gf(m, A + 1)), terms)


def check_delta_nonneg(m: int, A_max: int, terms: int) -> IdentityReport:
    """Every difference series for ``0 <= A <= A_max`` has nonnegative coefficients."""
    rng = f"A <= {A_max}, first {terms} terms"
    checked = 0
    for A in range(A_max + 1):
        series = difference_series(m, A, terms)
        checked += 1
        for N, c in enumerate(series):
            if c < 0:
                return make_report(
                    f"delta-nonneg-m{m}", rng, {"m": m, "A": A, "N": N, "coefficient": c}, checked
                )
    return make_report(f"delta-nonneg-m{m}", rng, checked=checked)
