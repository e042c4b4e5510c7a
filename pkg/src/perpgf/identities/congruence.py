"""Congruences mod a prime for differences of coefficients of [N+4 choose 4]_q.

Two families, for a prime ``ell`` and ``j >= 1``:

* ``a = 6*ell*j - 1``:  ``Delta p(2N - 2a, 4, N) = 0 (mod ell)``
* ``a = 6*ell*j``:      ``Delta p(2N - (2a+1), 4, N) = 0 (mod ell)``

:func:`congruence_scan` checks them literally for every ``N <= N_max``.
"""

from __future__ import annotations

from typing import Dict, List

from ..errors import NotPrime
from ..partitions import delta_bounded
from .report import IdentityReport, make_report


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def families(ell: int, j: int) -> Dict[str, dict]:
    a1, a2 = 6 * ell * j - 1, 6 * ell * j
    return {
        "even": {"a": a1, "offset": 2 * a1},
        "odd": {"a": a2, "offset": 2 * a2 + 1},
    }


def family_value(offset: int, N: int) -> int:
    return delta_bounded(1, 2 * N - offset, 4, N)


def congruence_failures(ell: int, j: int, N_max: int) -> Dict[str, List[int]]:
    """All ``N <= N_max`` at which each family is not divisible by ``ell``."""
    out = {}
    for name, fam in families(ell, j).items():
        out[name] = [N for N in range(N_max + 1) if family_value(fam["offset"], N) % ell]
    return out


def congruence_scan(ell: int, j: int, N_max: int) -> IdentityReport:
    if not is_prime(ell):
        raise NotPrime(f"{ell} is not prime")
    if j < 1:
        raise ValueError("j must be positive")
    ident = f"congruence-l{ell}-j{j}"
    rng = f"N <= {N_max}, both families"
    checked = 0
    for name, fam in families(ell, j).items():
        for N in range(N_max + 1):
            v = family_value(fam["offset"], N)
            checked += 1
            if v % ell:
                cx = {
                    "family": name, "a": fam["a"], "N": N, "prime": ell,
                    "n": 2 * N - fam["offset"], "difference": v, "residue": v % ell,
                }
                return make_report(ident, rng, cx, checked)
    return make_report(ident, rng, checked=checked)
