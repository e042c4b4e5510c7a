"""Difference identities for Gaussian-polynomial coefficients.

Every left side has the shape ``Delta p(floor(m*N/2) - A, m, N)``, so an
entry only needs ``m``, the offset ``A`` as a function of its parameters,
and a right side. The right side returns a tuple; the identity holds when
the left side equals every element of it.

By default an identity is asserted where both partition arguments of the
left difference are nonnegative (``floor(m*N/2) - A >= 1``). Pass
``literal=True`` to check every ``N`` instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, List, Tuple

from ..errors import UnknownIdentity
from ..partitions import delta_atmost, delta_bounded, p_atmost, p_parts_in
from .report import IdentityReport, make_report
from .unimodality import difference_series

Params = Dict[str, int]


@dataclass(frozen=True)
class Identity:
    id: str
    m: int
    statement: str
    offset: Callable[[Params], int]
    rhs: Callable[[int, Params], Tuple[int, ...]]
    params: Callable[[int], List[Params]] = lambda N_max: [{}]


def _by_residue(table):
    return lambda N, _: (table[N % 4],)


def _m5_center(N, _):
    n, i = divmod(N, 4)
    p3 = lambda k: p_atmost(k, 3)
    return ((p3(n), p3(n - 1) + p3(n - 3), p3(n - 4), p3(n - 1) + p3(n - 2))[i],)


PARTS_1235 = (1, 2, 3, 5)


def parts_1235_index(N: int) -> int:
    # argument is floor(N/2), shifted down by 7 for odd N
    return N // 2 if N % 2 == 0 else N // 2 - 7


def _m6_center(N, _):
    n = parts_1235_index(N)
    return (p_parts_in(n, PARTS_1235), delta_atmost(4, n, 5))


def _offsets(N_max: int) -> List[Params]:
    return [{"A": A} for A in range(N_max // 4 + 1)]


def _shifts(N_max: int) -> List[Params]:
    return [{"a": a} for a in range(N_max // 4 + 1)]


CATALOG: Dict[str, Identity] = {
    e.id: e
    for e in [
        Identity(
            "m1-flat", 1,
            "Delta p(floor(N/2)-A, 1, N) = Delta p(N, 1) = 0",
            lambda P: P["A"],
            lambda N, P: (delta_atmost(1, N, 1), 0),
            _offsets,
        ),
        Identity(
            "m2-parity", 2,
            "Delta p(N-A, 2, N) = Delta p(N-A, 2) = [N-A even]",
            lambda P: P["A"],
            lambda N, P: (delta_atmost(1, N - P["A"], 2), int((N - P["A"]) % 2 == 0)),
            _offsets,
        ),
        Identity(
            "m3-center", 3,
            "Delta p(floor(3N/2), 3, N) = 1, 0, 0, 0 for N = 0, 1, 2, 3 mod 4",
            lambda P: 0, _by_residue((1, 0, 0, 0)),
        ),
        Identity(
            "m3-offset1", 3,
            "Delta p(floor(3N/2)-1, 3, N) = 0, 1, 1, 1 for N = 0, 1, 2, 3 mod 4",
            lambda P: 1, _by_residue((0, 1, 1, 1)),
        ),
        Identity(
            "m3-offset2", 3,
            "Delta p(floor(3N/2)-2, 3, N) = 1, 1, 0, 1 for N = 0, 1, 2, 3 mod 4",
            lambda P: 2, _by_residue((1, 1, 0, 1)),
        ),
        Identity(
            "m4-even-shift", 4,
            "Delta p(2N-2a, 4, N) = Delta_{a+1} p(N-a, 3)",
            lambda P: 2 * P["a"],
            lambda N, P: (delta_atmost(P["a"] + 1, N - P["a"], 3),),
            _shifts,
        ),
        Identity(
            "m4-odd-shift", 4,
            "Delta p(2N-(2a+1), 4, N) = Delta_a p(N-2-a, 3)",
            lambda P: 2 * P["a"] + 1,
            lambda N, P: (delta_atmost(P["a"], N - 2 - P["a"], 3),),
            _shifts,
        ),
        Identity(
            "m4-center", 4,
            "Delta p(2N, 4, N) = Delta p(N, 3)",
            lambda P: 0,
            lambda N, P: (delta_atmost(1, N, 3),),
        ),
        Identity(
            "m4-offset1-zero", 4,
            "Delta p(2N-1, 4, N) = 0",
            lambda P: 1,
            lambda N, P: (0,),
        ),
        Identity(
            "m5-center", 5,
            "Delta p(floor(5N/2), 5, N) = p(n,3), p(n-1,3)+p(n-3,3), p(n-4,3), "
            "p(n-1,3)+p(n-2,3) for N = 4n, 4n+1, 4n+2, 4n+3",
            lambda P: 0, _m5_center,
        ),
        Identity(
            "m6-center", 6,
            "Delta p(3N, 6, N) = p(n | parts in {1,2,3,5}) = Delta_4 p(n, 5) "
            "with n = N/2 (N even) or (N-1)/2 - 7 (N odd)",
            lambda P: 0, _m6_center,
        ),
    ]
}


def catalog_ids() -> List[str]:
    return list(CATALOG)


def get_identity(identity_id: str) -> Identity:
    try:
        return CATALOG[identity_id]
    except KeyError:
        raise UnknownIdentity(identity_id) from None


def check_identity_catalog(
    identity_id: str, N_max: int, path: str = "both", literal: bool = False
) -> IdentityReport:
    """Check one catalog identity for ``N <= N_max``.

    ``path`` selects how the left side is evaluated: ``"oracle"`` (partition
    counts), ``"perpgf"`` (series of the difference GF) or ``"both"``, which
    also requires the two evaluations to agree entry by entry.
    """
    if path not in ("oracle", "perpgf", "both"):
        raise ValueError(f"unknown path {path!r}")
    ident = get_identity(identity_id)
    m = ident.m
    sweep = ident.params(N_max)
    domain = "all N" if literal else f"floor({m}N/2) - A >= 1"
    rng = f"N <= {N_max}, {len(sweep)} parameter set(s), {domain}, path={path}"
    checked = 0
    for P in sweep:
        A = ident.offset(P)
        series = difference_series(m, A, N_max + 1) if path != "oracle" else None
        for N in range(N_max + 1):
            x = m * N // 2 - A
            if not literal and x < 1:
                continue
            lhs = {}
            if path != "perpgf":
                lhs["oracle"] = delta_bounded(1, x, m, N)
            if series is not None:
                lhs["perpgf"] = series[N]
            rhs = ident.rhs(N, P)
            checked += 1
            values = set(lhs.values()) | set(rhs)
            if len(values) != 1:
                cx = {"N": N, **P, "A": A, "lhs": lhs, "rhs": list(rhs)}
                return make_report(identity_id, rng, cx, checked, (ident.statement,))
    return make_report(identity_id, rng, checked=checked, notes=(ident.statement,))


def check_all(N_max: int, path: str = "both", literal: bool = False) -> List[IdentityReport]:
    return [check_identity_catalog(i, N_max, path, literal) for i in CATALOG]
