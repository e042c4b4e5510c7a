"""Dense univariate polynomials over the integers.

Coefficients are Python ints, so every operation is exact. A ``Poly`` is
immutable; the zero polynomial is the empty coefficient tuple and has
degree ``None``.
"""

from __future__ import annotations

import re
from math import comb
from typing import Iterable, Optional, Sequence

from .errors import NonZeroRemainder

__all__ = [
    "Poly",
    "poly_add",
    "poly_mul",
    "poly_exact_div",
    "div_one_minus",
    "pochhammer",
    "gaussian_poly",
    "dissect",
    "inflate",
    "parse_poly",
]


def _trim(coeffs: Iterable[int]) -> tuple:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class Poly:
    """Polynomial in ``z`` with integer coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", _trim(int(c) for c in coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "Poly":
        if exponent < 0:
            raise ValueError("negative exponent")
        return cls([0] * exponent + [coeff])

    @classmethod
    def one_minus(cls, k: int) -> "Poly":
        """The factor ``1 - z^k``."""
        if k < 1:
            raise ValueError("k must be positive")
        return cls([1] + [0] * (k - 1) + [-1])

    @classmethod
    def from_terms(cls, terms: Iterable[tuple]) -> "Poly":
        """Build from ``(coeff, exponent)`` pairs; repeated exponents add up."""
        acc: dict = {}
        for c, e in terms:
            if e < 0:
                raise ValueError(f"negative exponent {e}")
            acc[e] = acc.get(e, 0) + c
        if not acc:
            return ZERO
        out = [0] * (max(acc) + 1)
        for e, c in acc.items():
            out[e] = c
        return cls(out)

    @property
    def degree(self) -> Optional[int]:
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i: int) -> int:
        if i < 0:
            raise IndexError("negative coefficient index")
        return self.coeffs[i] if i < len(self.coeffs) else 0

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == _trim([other])
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"Poly({list(self.coeffs)})"

    def __str__(self):
        return render(self)

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return poly_add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return poly_add(self, -other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return poly_add(other, -self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shift(self, e: int) -> "Poly":
        """Multiply by ``z^e``."""
        if e < 0:
            raise ValueError("negative shift")
        if not self.coeffs or e == 0:
            return self
        return Poly((0,) * e + self.coeffs)

    def truncate(self, n: int) -> "Poly":
        """Keep the terms of degree below ``n``."""
        return Poly(self.coeffs[:n])


def _coerce(x) -> Optional[Poly]:
    if isinstance(x, Poly):
        return x
    if isinstance(x, int):
        return Poly([x])
    return None


ZERO = Poly()
ONE = Poly([1])


def poly_add(p: Poly, q: Poly) -> Poly:
    a, b = p.coeffs, q.coeffs
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return Poly(out)


def poly_mul(p: Poly, q: Poly) -> Poly:
    a, b = p.coeffs, q.coeffs
    if not a or not b:
        return ZERO
    if len(a) < len(b):
        a, b = b, a
    out = [0] * (len(a) + len(b) - 1)
    # iterate over the shorter, sparser factor
    for j, y in enumerate(b):
        if y:
            for i, x in enumerate(a):
                out[i + j] += x * y
    return Poly(out)


def poly_exact_div(num: Poly, den: Poly) -> Poly:
    """Return ``q`` with ``q * den == num``; raise NonZeroRemainder otherwise."""
    if den.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    d = den.coeffs
    if not num.coeffs:
        return ZERO
    rem = list(num.coeffs)
    dd = len(d) - 1
    lc = d[-1]
    nq = len(rem) - dd
    if nq <= 0:
        raise NonZeroRemainder(num, den, num)
    quot = [0] * nq
    for i in range(nq - 1, -1, -1):
        c = rem[i + dd]
        if c == 0:
            continue
        if c % lc:
            raise NonZeroRemainder(num, den, Poly(rem[: i + dd + 1]))
        c //= lc
        quot[i] = c
        for k, dk in enumerate(d):
            if dk:
                rem[i + k] -= c * dk
    if any(rem):
        raise NonZeroRemainder(num, den, Poly(rem))
    return Poly(quot)


def div_one_minus(p: Poly, k: int) -> Poly:
    """Exact division by ``1 - z^k`` in linear time."""
    c = p.coeffs
    if not c:
        return ZERO
    n = len(c) - k
    if n <= 0:
        raise NonZeroRemainder(p, Poly.one_minus(k), p)
    q = [0] * n
    for i in range(n):
        q[i] = c[i] + (q[i - k] if i >= k else 0)
    # leftover top coefficients must cancel: c[i] + q[i-k] == 0 for i >= n
    for i in range(n, len(c)):
        if c[i] + (q[i - k] if 0 <= i - k < n else 0) != 0:
            raise NonZeroRemainder(p, Poly.one_minus(k), p - Poly(q) * Poly.one_minus(k))
    return Poly(q)


def pochhammer(start: int, step: int, count: int) -> Poly:
    """``prod_{i<count} (1 - z^(start + i*step))``."""
    if start < 1 or step < 1:
        raise ValueError("start and step must be positive")
    if count < 0:
        raise ValueError("count must be nonnegative")
    out = [1]
    for i in range(count):
        e = start + i * step
        nxt = out + [0] * e
        for t, c in enumerate(out):
            nxt[t + e] -= c
        out = nxt
    return Poly(out)


def gaussian_poly(m: int, N: int) -> Poly:
    """Coefficients of the q-binomial ``[N+m choose m]_q``.

    Computed as ``(q^{N+1};q)_k / (q;q)_k`` with ``k = min(m, N)``, dividing
    out one ``1 - q^i`` at a time; every partial quotient is itself a
    polynomial, so each step is exact.
    """
    if m < 0 or N < 0:
        raise ValueError("m and N must be nonnegative")
    k, n = min(m, N), max(m, N)
    p = pochhammer(n + 1, 1, k)
    for i in range(1, k + 1):
        p = div_one_minus(p, i)
    return p


def dissect(p: Poly, s: int) -> Poly:
    """Keep every ``s``-th coefficient: result[i] = p[i*s]."""
    if s < 1:
        raise ValueError("s must be positive")
    return Poly(p.coeffs[::s])


def inflate(p: Poly, s: int) -> Poly:
    """Substitute ``z -> z^s``."""
    if s < 1:
        raise ValueError("s must be positive")
    if s == 1 or not p.coeffs:
        return p
    out = [0] * ((len(p.coeffs) - 1) * s + 1)
    out[::s] = p.coeffs
    return Poly(out)


def binomial_sum(m: int, N: int) -> int:
    return comb(N + m, m)


def render(p: Poly, var: str = "z") -> str:
    """Text form ``c0 + c1*z + c2*z^2``; zero terms omitted, zero is ``0``."""
    parts = []
    for i, c in enumerate(p.coeffs):
        if c == 0:
            continue
        mono = "" if i == 0 else (f"*{var}" if i == 1 else f"*{var}^{i}")
        body = f"{abs(c)}{mono}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts) if parts else "0"


_TERM = re.compile(r"([+-]?)\s*(\d+)(?:\*([a-zA-Z])(?:\^(\d+))?)?$")


def parse_poly(text: str) -> Poly:
    """Inverse of :func:`render`."""
    s = text.strip()
    if s == "0":
        return ZERO
    tokens = re.split(r"\s+(?=[+-]\s)", s)
    terms = []
    for tok in tokens:
        m = _TERM.match(tok.strip())
        if not m:
            raise ValueError(f"cannot parse polynomial term {tok!r}")
        sign, coeff, var, exp = m.groups()
        c = int(coeff) * (-1 if sign == "-" else 1)
        e = 0 if var is None else (1 if exp is None else int(exp))
        terms.append((c, e))
    return Poly.from_terms(terms)


def coefficients(p: Poly, length: Optional[int] = None) -> list:
    """Coefficient list, optionally zero-padded/truncated to ``length``."""
    c = list(p.coeffs)
    if length is None:
        return c
    return (c + [0] * length)[:length]


def as_poly(x: "Poly | Sequence[int] | int") -> Poly:
    if isinstance(x, Poly):
        return x
    if isinstance(x, int):
        return Poly([x])
    return Poly(x)
