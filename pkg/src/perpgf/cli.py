"""Command-line front end.

Exit codes: 0 pass, 1 identity or verification failure, 2 usage error.
With ``--format json`` every command prints one envelope
``{command, parameters, result, status[, error_detail]}`` in which all
integers are decimal strings.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from .engine import RationalGF, expand, perp_gf
from .errors import NegativeA, NotPrime, PerpGFError, UnknownIdentity
from .identities import (
    catalog_ids,
    check_appendix_goldens,
    check_identity_catalog,
    congruence_scan,
    quasipolynomial_extract,
)
from .partitions import p_bounded
from .poly import gaussian_poly, parse_poly, render

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _strs(values):
    return [str(v) for v in values]


def _jsonable(x):
    if isinstance(x, bool) or x is None:
        return x
    if isinstance(x, (int, Fraction)):
        return str(x)
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def render_factors(factors) -> str:
    return "".join(f"(1-z^{k})" + (f"^{m}" if m > 1 else "") for k, m in factors) or "1"


def parse_factors(text: str):
    """``"1:2,3"`` -> ``[(1, 2), (3, 1)]``."""
    out = []
    for item in filter(None, (s.strip() for s in text.split(","))):
        k, _, mult = item.partition(":")
        try:
            out.append((int(k), int(mult) if mult else 1))
        except ValueError:
            raise UsageError(f"bad denominator factor {item!r}") from None
    return out


def render_fraction_poly(coeffs, var: str = "k") -> str:
    parts = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        mono = "" if i == 0 else (f"*{var}" if i == 1 else f"*{var}^{i}")
        body = f"{abs(c)}{mono}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts) if parts else "0"


def _nonneg(name, value):
    if value < 0:
        raise UsageError(f"{name} must be nonnegative, got {value}")


# each handler returns (result payload, text lines, exit code)


def cmd_qbin(args):
    _nonneg("m", args.m)
    _nonneg("N", args.N)
    coeffs = list(gaussian_poly(args.m, args.N))
    return {"coefficients": coeffs}, [" ".join(_strs(coeffs))], EXIT_OK


def _gf_payload(gf: RationalGF, terms: int):
    series = expand(gf, terms)
    payload = {
        "numerator": render(gf.numerator),
        "numerator_coefficients": list(gf.numerator),
        "denominator": [[k, m] for k, m in gf.denominator],
        "series": series,
    }
    lines = [
        f"numerator: {render(gf.numerator)}",
        f"denominator: {render_factors(gf.denominator)}",
        f"series: {' '.join(_strs(series))}",
    ]
    return payload, lines


def cmd_perp(args):
    if args.m < 1:
        raise UsageError("m must be positive")
    if args.terms < 1:
        raise UsageError("terms must be positive")
    payload, lines = _gf_payload(perp_gf(args.m, args.A), args.terms)
    return payload, lines, EXIT_OK


def cmd_expand(args):
    if args.terms < 1:
        raise UsageError("terms must be positive")
    try:
        num = parse_poly(args.num)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    payload, lines = _gf_payload(RationalGF(num, parse_factors(args.den)), args.terms)
    return payload, lines, EXIT_OK


def _verify_one(m, A, max_N):
    series = expand(perp_gf(m, A), max_N + 1)
    for N, got in enumerate(series):
        want = p_bounded(m * N // 2 - A, m, N)
        if got != want:
            return {"m": m, "A": A, "N": N, "series": got, "oracle": want}
    return None


def cmd_verify(args):
    if args.m < 1:
        raise UsageError("m must be positive")
    _nonneg("max-N", args.max_N)
    max_A = args.max_A if args.max_A is not None else args.m * args.max_N // 2
    _nonneg("max-A", max_A)
    with ThreadPoolExecutor(max_workers=args.threads) as pool:
        results = list(pool.map(lambda A: _verify_one(args.m, A, args.max_N), range(max_A + 1)))
    mismatch = next((r for r in results if r is not None), None)
    checked = (max_A + 1) * (args.max_N + 1)
    payload = {"agree": mismatch is None, "checked": checked, "first_mismatch": mismatch}
    if mismatch is None:
        lines = [f"ok: m={args.m}, N<={args.max_N}, A<={max_A}, {checked} coefficients agree"]
        return payload, lines, EXIT_OK
    lines = [
        "mismatch: m={m} A={A} N={N} series={series} oracle={oracle}".format(**mismatch)
    ]
    return payload, lines, EXIT_FAIL


def cmd_quasi(args):
    if args.m < 1:
        raise UsageError("m must be positive")
    if args.style == "atmost":
        gf = RationalGF([1], [(k, 1) for k in range(1, args.m + 1)])
    else:
        gf = perp_gf(args.m, args.A)
    qp = quasipolynomial_extract(gf)
    d = qp.period
    payload = {
        "period": d,
        "valid_from": qp.valid_from,
        "constituents": [list(c) for c in qp.constituents],
    }
    lines = [f"period: {d}", f"valid_from: {qp.valid_from}"]
    for i, c in enumerate(qp.constituents):
        lines.append(f"n = {d}k+{i}: {render_fraction_poly(c)}")
    return payload, lines, EXIT_OK


def _report_lines(rep):
    line = f"{rep.identity_id}: {rep.status} ({rep.range_checked}; {rep.checked} checked)"
    out = [line]
    if rep.counterexample is not None:
        out.append(f"  counterexample: {rep.counterexample}")
    for note in rep.notes[1:] if rep.identity_id in catalog_ids() else rep.notes:
        out.append(f"  note: {note}")
    return out


def cmd_identity(args):
    _nonneg("max-N", args.max_N)
    ids = catalog_ids() if args.id == "all" else [args.id]
    with ThreadPoolExecutor(max_workers=args.threads) as pool:
        reports = list(
            pool.map(lambda i: check_identity_catalog(i, args.max_N, args.path, args.literal), ids)
        )
    lines = [l for r in reports for l in _report_lines(r)]
    ok = all(r.passed for r in reports)
    payload = {"reports": [r.to_dict() for r in reports]}
    return payload, lines, EXIT_OK if ok else EXIT_FAIL


def cmd_congruence(args):
    _nonneg("max-N", args.max_N)
    rep = congruence_scan(args.prime, args.j, args.max_N)
    return rep.to_dict(), _report_lines(rep), EXIT_OK if rep.passed else EXIT_FAIL


def cmd_golden(args):
    _nonneg("max-a", args.max_a)
    rep = check_appendix_goldens(args.which, args.max_a, apply_errata=not args.no_errata)
    return rep.to_dict(), _report_lines(rep), EXIT_OK if rep.passed else EXIT_FAIL


def _add_globals(p, suppress):
    # subparsers suppress their defaults so a flag given before the subcommand survives
    p.add_argument("--format", choices=("text", "json"),
                   default=argparse.SUPPRESS if suppress else "text")
    p.add_argument("--threads", type=int, default=argparse.SUPPRESS if suppress else 1)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="perpgf",
        description="Perpendicular generating functions for Gaussian-polynomial coefficients.",
    )
    _add_globals(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        _add_globals(p, suppress=True)
        p.set_defaults(func=func)
        return p

    p = add("qbin", cmd_qbin, "coefficients of [N+m choose m]_q")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--N", type=int, required=True)

    p = add("perp", cmd_perp, "perpendicular GF for (m, A) and its series")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--A", type=int, required=True)
    p.add_argument("--terms", type=int, default=20)

    p = add("expand", cmd_expand, "series of numerator / prod (1 - z^k)^mult")
    p.add_argument("--num", required=True, help='numerator, e.g. "1 - 1*z + 1*z^2"')
    p.add_argument("--den", required=True, help='factors k[:mult], e.g. "1:2,2,3"')
    p.add_argument("--terms", type=int, default=20)

    p = add("verify", cmd_verify, "check perp_gf series against the partition oracle")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--max-N", dest="max_N", type=int, required=True)
    p.add_argument("--max-A", dest="max_A", type=int, default=None)

    p = add("quasi", cmd_quasi, "quasipolynomial of a GF's coefficients")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--A", type=int, default=0)
    p.add_argument("--style", choices=("perp", "atmost"), default="perp",
                   help="perp: perp_gf(m, A); atmost: p(n, m)")

    p = add("identity", cmd_identity, "check a difference identity from the catalog")
    p.add_argument("--id", required=True, help="catalog id or 'all'")
    p.add_argument("--max-N", dest="max_N", type=int, default=200)
    p.add_argument("--path", choices=("oracle", "perpgf", "both"), default="both")
    p.add_argument("--literal", action="store_true",
                   help="also check N where the left side has a negative argument")

    p = add("congruence", cmd_congruence, "scan the mod-prime congruence families")
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--max-N", dest="max_N", type=int, default=300)

    p = add("golden", cmd_golden, "compare stored m=5/m=6 closed forms with the engine")
    p.add_argument("--which", choices=("m5", "m6"), required=True)
    p.add_argument("--max-a", dest="max_a", type=int, default=3)
    p.add_argument("--no-errata", action="store_true",
                   help="fail on printed formulas even when an erratum fixes them")
    return parser


def _params(args) -> dict:
    skip = {"func", "command", "format"}
    return {k: v for k, v in vars(args).items() if k not in skip}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads < 1:
        parser.error("--threads must be positive")
    envelope = {"command": args.command, "parameters": _jsonable(_params(args))}
    try:
        result, lines, code = args.func(args)
    except (UsageError, NegativeA, NotPrime, UnknownIdentity, ValueError) as exc:
        detail = f"{type(exc).__name__}: {exc}"
        code, result, lines = EXIT_USAGE, None, None
    except (PerpGFError, OSError) as exc:
        detail = f"{type(exc).__name__}: {exc}"
        code, result, lines = EXIT_FAIL, None, None
    if args.format == "json":
        envelope["result"] = _jsonable(result)
        if lines is None:
            envelope["status"] = "error"
            envelope["error_detail"] = detail
        else:
            envelope["status"] = "ok"
        print(json.dumps(envelope, indent=2))
    elif lines is None:
        print(f"error: {detail}", file=sys.stderr)
    else:
        print("\n".join(lines))
    return code


if __name__ == "__main__":
    sys.exit(main())
