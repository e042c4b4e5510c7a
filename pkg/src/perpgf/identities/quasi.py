"""Quasipolynomial form of the coefficients of a rational GF.

When the denominator is a product of ``1 - z^k`` factors, the coefficient
sequence agrees, for large enough ``n``, with a quasipolynomial whose period
is the lcm of the distinct ``k`` and whose constituents have degree below
the number of factors. Constituents are stored in the variable ``k`` of
``n = d*k + i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import comb, lcm
from typing import List, Sequence, Tuple

from ..engine import RationalGF, expand
from ..errors import FitFailure

CHECK_TERMS = 3


@dataclass(frozen=True)
class QuasiPolynomial:
    period: int
    constituents: Tuple[Tuple[Fraction, ...], ...]
    valid_from: int

    def constituent_value(self, i: int, k: int) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.constituents[i]):
            acc = acc * k + c
        return acc

    def __call__(self, n: int) -> Fraction:
        k, i = divmod(n, self.period)
        return self.constituent_value(i, k)

    def degree(self, i: int) -> int:
        c = self.constituents[i]
        return len(c) - 1 if c else -1

    def n_form(self, i: int) -> Tuple[Fraction, ...]:
        """Constituent ``i`` re-expressed in ``n`` (``k = (n - i)/d``); for display."""
        d = self.period
        out = [Fraction(0)] * len(self.constituents[i])
        # sum_p c_p ((n - i)/d)^p
        for p, c in enumerate(self.constituents[i]):
            for t in range(p + 1):
                out[t] += c * comb(p, t) * Fraction(-i, 1) ** (p - t) / Fraction(d) ** p
        return tuple(_trim(out))


def _trim(c: List[Fraction]) -> List[Fraction]:
    while c and c[-1] == 0:
        c.pop()
    return c


def interpolate(xs: Sequence[int], ys: Sequence[int]) -> Tuple[Fraction, ...]:
    """Exact polynomial through ``(xs[t], ys[t])``, coefficients lowest first."""
    n = len(xs)
    dd = [Fraction(y) for y in ys]
    for level in range(1, n):
        for t in range(n - 1, level - 1, -1):
            dd[t] = (dd[t] - dd[t - 1]) / (xs[t] - xs[t - level])
    # Newton form -> monomial coefficients via Horner
    coeffs = [Fraction(0)] * n
    for t in range(n - 1, -1, -1):
        # coeffs = coeffs * (x - xs[t]) + dd[t]
        nxt = [Fraction(0)] * n
        for p in range(n - 1):
            nxt[p + 1] += coeffs[p]
            nxt[p] -= coeffs[p] * xs[t]
        nxt[0] += dd[t]
        coeffs = nxt
    return tuple(_trim(coeffs))


def quasipolynomial_extract(gf: RationalGF) -> QuasiPolynomial:
    if not gf.denominator:
        raise ValueError("denominator must be nonempty")
    d = reduce(lcm, (k for k, _ in gf.denominator), 1)
    npts = gf.factor_count  # degree bound + 1
    deg_num = gf.numerator.degree if gf.numerator.degree is not None else -1
    starts = []
    for i in range(d):
        k0 = max(0, (deg_num - i) // d + 1)  # smallest k with d*k + i > deg numerator
        starts.append(k0)
    last_k = max(starts) + npts + CHECK_TERMS
    series = expand(gf, d * last_k + d)
    constituents = []
    for i in range(d):
        ks = list(range(starts[i], starts[i] + npts))
        poly = interpolate(ks, [series[d * k + i] for k in ks])
        constituents.append(poly)
    qp = QuasiPolynomial(d, tuple(constituents), 0)
    for i in range(d):
        for k in range(starts[i] + npts, starts[i] + npts + CHECK_TERMS):
            n = d * k + i
            if qp(n) != series[n]:
                raise FitFailure(f"residue {i}: predicted {qp(n)} at n={n}, series has {series[n]}")
    # every fitting window starts past the numerator degree; extend down while predictions hold
    valid_from = deg_num + 1
    while valid_from > 0 and qp(valid_from - 1) == series[valid_from - 1]:
        valid_from -= 1
    return QuasiPolynomial(d, tuple(constituents), valid_from)
