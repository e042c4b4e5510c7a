"""Perpendicular generating functions for Gaussian-polynomial coefficients.

For fixed ``m`` and offset ``A`` the series

    sum_{N >= 0} p(floor(m*N/2) - A, m, N) z^N

is rational in ``z``. :func:`perp_gf` builds it in closed form: a numerator
assembled from dissections of explicit polynomial quotients, over a fixed
product of ``1 - z^k`` factors that depends only on ``m``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache, reduce
from math import comb, lcm
from typing import Iterable, List, Tuple

from .errors import DenominatorMismatch, NegativeA, NonZeroRemainder, PolynomialityViolation
from .poly import ONE, Poly, dissect, gaussian_poly, inflate, pochhammer, poly_exact_div

__all__ = [
    "RationalGF",
    "PerpIndex",
    "decompose",
    "numerator_even",
    "numerator_odd",
    "even_denominator",
    "odd_denominator",
    "perp_gf",
    "expand",
    "gf_sub",
    "gf_equal",
]

Factors = Tuple[Tuple[int, int], ...]


def _normalize(factors: Iterable[Tuple[int, int]]) -> Factors:
    acc: Counter = Counter()
    for k, mult in factors:
        if k < 1 or mult < 0:
            raise ValueError(f"bad denominator factor {(k, mult)}")
        acc[k] += mult
    return tuple(sorted((k, v) for k, v in acc.items() if v))


@dataclass(frozen=True, eq=False)
class RationalGF:
    """``numerator / prod (1 - z^k)^mult`` kept in unreduced normal form.

    ``==`` compares by cross-multiplication, so two representations of the
    same rational function are equal even when their factor lists differ.
    """

    numerator: Poly
    denominator: Factors

    def __init__(self, numerator, denominator: Iterable[Tuple[int, int]]):
        if not isinstance(numerator, Poly):
            numerator = Poly(numerator)
        object.__setattr__(self, "numerator", numerator)
        object.__setattr__(self, "denominator", _normalize(denominator))

    def denominator_poly(self) -> Poly:
        out = ONE
        for k, mult in self.denominator:
            out = out * Poly.one_minus(k) ** mult
        return out

    @property
    def factor_count(self) -> int:
        return sum(mult for _, mult in self.denominator)

    @property
    def denominator_degree(self) -> int:
        return sum(k * mult for k, mult in self.denominator)

    def expand(self, terms: int) -> List[int]:
        return expand(self, terms)

    def __eq__(self, other):
        if not isinstance(other, RationalGF):
            return NotImplemented
        return gf_equal(self, other)

    __hash__ = None

    def __sub__(self, other):
        return gf_sub(self, other)

    def __repr__(self):
        den = "".join(
            f"(1-z^{k})" + (f"^{m}" if m > 1 else "") for k, m in self.denominator
        )
        return f"RationalGF(({self.numerator}) / {den or '1'})"


@dataclass(frozen=True)
class PerpIndex:
    """Parameters of one perpendicular GF: ``A = modulus * a + r``.

    ``m = 2M`` (modulus ``lcm(1..M)``) or ``m = 2M - 1`` (modulus
    ``lcm(1, 3, ..., 2M-1)``).
    """

    m: int
    A: int
    M: int
    a: int
    r: int
    modulus: int

    @property
    def even(self) -> bool:
        return self.m % 2 == 0


def even_modulus(M: int) -> int:
    return reduce(lcm, range(1, M + 1), 1)


def odd_modulus(M: int) -> int:
    return reduce(lcm, range(1, 2 * M, 2), 1)


def decompose(m: int, A: int) -> PerpIndex:
    if m < 1:
        raise ValueError("m must be positive")
    if A < 0:
        raise NegativeA(f"A={A} is negative")
    if m % 2 == 0:
        M = m // 2
        modulus = even_modulus(M)
    else:
        M = (m + 1) // 2
        modulus = odd_modulus(M)
    a, r = divmod(A, modulus)
    return PerpIndex(m=m, A=A, M=M, a=a, r=r, modulus=modulus)


def even_denominator(M: int) -> Factors:
    """``(1 - z^2) (z;z)_{2M-1}``."""
    return _normalize([(2, 1)] + [(k, 1) for k in range(1, 2 * M)])


def odd_denominator(M: int) -> Factors:
    """``(1 - z) (z^2;z^2)_{2M-2}``."""
    return _normalize([(1, 1)] + [(2 * i, 1) for i in range(1, 2 * M - 1)])


@lru_cache(maxsize=None)
def _even_core(M: int, j: int) -> Poly:
    # (1 - z^{2j}) (z^j;z^j)_{2M-1} [2M, M-j]_z / (z;z)_{2M}
    top = Poly.one_minus(2 * j) * pochhammer(j, j, 2 * M - 1) * gaussian_poly(M - j, M + j)
    try:
        return poly_exact_div(top, pochhammer(1, 1, 2 * M))
    except NonZeroRemainder as exc:
        raise PolynomialityViolation(M, j, exc) from exc


@lru_cache(maxsize=None)
def _odd_core(M: int, j: int) -> Poly:
    # (1 - z^s) (z^{2s};z^{2s})_{2M-2} [2M-1, M-j]_{z^2} / ((1-z) (z^4;z^2)_{2M-2}),  s = 2j-1
    s = 2 * j - 1
    top = (
        Poly.one_minus(s)
        * pochhammer(2 * s, 2 * s, 2 * M - 2)
        * inflate(gaussian_poly(M - j, M + j - 1), 2)
    )
    bottom = Poly.one_minus(1) * pochhammer(4, 2, 2 * M - 2)
    try:
        return poly_exact_div(top, bottom)
    except NonZeroRemainder as exc:
        raise PolynomialityViolation(M, j, exc) from exc


def _shifted_dissection(core: Poly, shift: int, s: int) -> Poly:
    # S_s(z^shift * core) without materializing the shifted polynomial
    first = (-shift) % s
    return Poly(core.coeffs[first::s]).shift((shift + first) // s)


def numerator_even(M: int, a: int, r: int) -> Poly:
    """Numerator over :func:`even_denominator` for ``m = 2M``, ``A = lcm(1..M)*a + r``."""
    if M < 1 or a < 0 or r < 0:
        raise ValueError("need M >= 1 and a, r >= 0")
    mod = even_modulus(M)
    total = Poly()
    for j in range(1, M + 1):
        term = _shifted_dissection(_even_core(M, j), r + comb(M - j + 1, 2), j)
        term = term.shift(mod * a // j)
        total = total + term if (M - j) % 2 == 0 else total - term
    return total


def numerator_odd(M: int, a: int, r: int) -> Poly:
    """Numerator over :func:`odd_denominator` for ``m = 2M-1``, ``A = lcm(1,3,..,2M-1)*a + r``."""
    if M < 1 or a < 0 or r < 0:
        raise ValueError("need M >= 1 and a, r >= 0")
    mod = odd_modulus(M)
    total = Poly()
    for j in range(1, M + 1):
        s = 2 * j - 1
        term = _shifted_dissection(_odd_core(M, j), 2 * r + 2 * comb(M - j + 1, 2), s)
        term = term.shift(2 * mod * a // s)
        total = total + term if (M - j) % 2 == 0 else total - term
    return total


def perp_gf(m: int, A: int) -> RationalGF:
    """Rational GF whose ``z^N`` coefficient is ``p(floor(m*N/2) - A, m, N)``.

    For even ``m`` a negative ``A`` is folded to ``|A|`` (the coefficients are
    symmetric about ``m*N/2``). For odd ``m`` the reflection depends on the
    parity of ``N``, so negative ``A`` raises :class:`NegativeA`.
    """
    if m < 1:
        raise ValueError("m must be positive")
    if A < 0:
        if m % 2:
            raise NegativeA(f"negative A={A} is not supported for odd m={m}")
        A = -A
    idx = decompose(m, A)
    if idx.even:
        return RationalGF(numerator_even(idx.M, idx.a, idx.r), even_denominator(idx.M))
    return RationalGF(numerator_odd(idx.M, idx.a, idx.r), odd_denominator(idx.M))


def expand(gf: RationalGF, terms: int) -> List[int]:
    """First ``terms`` power-series coefficients of ``gf``."""
    if terms < 1:
        raise ValueError("terms must be positive")
    c = list(gf.numerator.coeffs[:terms])
    c += [0] * (terms - len(c))
    for k, mult in gf.denominator:
        for _ in range(mult):
            for i in range(k, terms):
                c[i] += c[i - k]
    return c


def gf_sub(g1: RationalGF, g2: RationalGF) -> RationalGF:
    if g1.denominator != g2.denominator:
        raise DenominatorMismatch(f"{g1.denominator} != {g2.denominator}")
    return RationalGF(g1.numerator - g2.numerator, g1.denominator)


def gf_equal(g1: RationalGF, g2: RationalGF) -> bool:
    # cancel the common part of the factor multisets before multiplying out
    d1, d2 = Counter(dict(g1.denominator)), Counter(dict(g2.denominator))
    common = d1 & d2
    rest1 = RationalGF(ONE, (d1 - common).items()).denominator_poly()
    rest2 = RationalGF(ONE, (d2 - common).items()).denominator_poly()
    return g1.numerator * rest2 == g2.numerator * rest1
