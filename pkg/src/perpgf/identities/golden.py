"""Closed-form perpendicular GFs for m = 5 and m = 6, stored as data.

Each record gives the numerator as terms ``[coeff, const_exp, a_coeff]``
meaning ``coeff * z^(const_exp + a_coeff*a)`` and the denominator as
``[k, mult]`` pairs; the offset is ``A = modulus*a + r``. The records are
the formulas exactly as published. A record's optional ``errata`` list
holds terms (same layout) that the printed formula omits; the check
reports the printed form first and only then tries the corrected one.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import List, Optional, Tuple

from ..engine import RationalGF, expand, gf_equal, perp_gf
from ..poly import Poly
from .report import IdentityReport, make_report

GOLDEN_ENV = "PERPGF_GOLDEN_DIR"
DIFF_TERMS = 300
WHICH = ("m5", "m6")


@dataclass(frozen=True)
class GoldenCase:
    m: int
    case_index: int
    modulus: int
    r: int
    numerator_terms: Tuple[Tuple[int, int, int], ...]
    denominator: Tuple[Tuple[int, int], ...]
    errata: Tuple[Tuple[int, int, int], ...] = ()

    @classmethod
    def from_record(cls, rec: dict) -> "GoldenCase":
        return cls(
            m=rec["m"],
            case_index=rec["case_index"],
            modulus=rec["A_form"]["modulus"],
            r=rec["A_form"]["r"],
            numerator_terms=tuple(tuple(t) for t in rec["numerator_terms"]),
            denominator=tuple(tuple(f) for f in rec["denominator"]),
            errata=tuple(tuple(t) for t in rec.get("errata", ())),
        )

    def to_record(self) -> dict:
        return {
            "m": self.m,
            "case_index": self.case_index,
            "A_form": {"modulus": self.modulus, "r": self.r},
            "numerator_terms": [list(t) for t in self.numerator_terms],
            "denominator": [list(f) for f in self.denominator],
            "errata": [list(t) for t in self.errata],
        }

    def offset(self, a: int) -> int:
        return self.modulus * a + self.r

    def instantiate(self, a: int, corrected: bool = False) -> RationalGF:
        terms = self.numerator_terms + (self.errata if corrected else ())
        num = Poly.from_terms((c, e0 + ea * a) for c, e0, ea in terms)
        return RationalGF(num, self.denominator)


def golden_path(which: str) -> Path:
    if which not in WHICH:
        raise ValueError(f"which must be one of {WHICH}")
    override = os.environ.get(GOLDEN_ENV)
    if override:
        return Path(override) / f"golden_{which}.json"
    return Path(str(resources.files("perpgf") / "data" / f"golden_{which}.json"))


def load_golden(which: str) -> List[GoldenCase]:
    with open(golden_path(which)) as fh:
        return [GoldenCase.from_record(rec) for rec in json.load(fh)]


def series_diff(g1: RationalGF, g2: RationalGF, terms: int = DIFF_TERMS) -> List[Tuple[int, int, int]]:
    """``(N, coeff1, coeff2)`` wherever the first ``terms`` coefficients differ."""
    s1, s2 = expand(g1, terms), expand(g2, terms)
    return [(N, x, y) for N, (x, y) in enumerate(zip(s1, s2)) if x != y]


@dataclass(frozen=True)
class CaseResult:
    case_index: int
    a: int
    A: int
    printed_ok: bool
    corrected_ok: Optional[bool]
    diff: Tuple[Tuple[int, int, int], ...]


def compare_cases(which: str, a_max: int) -> List[CaseResult]:
    out = []
    for case in load_golden(which):
        for a in range(a_max + 1):
            A = case.offset(a)
            engine = perp_gf(case.m, A)
            printed = case.instantiate(a)
            ok = gf_equal(printed, engine)
            diff = () if ok else tuple(series_diff(printed, engine))
            corrected = None
            if not ok and case.errata:
                corrected = not series_diff(case.instantiate(a, corrected=True), engine)
            out.append(CaseResult(case.case_index, a, A, ok, corrected, diff))
    return out


def check_appendix_goldens(which: str, a_max: int, apply_errata: bool = True) -> IdentityReport:
    """Compare every stored closed form with the engine for ``a <= a_max``.

    A printed formula that disagrees with the engine fails the check unless
    ``apply_errata`` is set and the record's errata terms make the first
    300 series coefficients agree. Either way the mismatch is listed in the
    report notes together with its series diff.
    """
    rng = f"all cases, a <= {a_max}, {DIFF_TERMS}-term series"
    notes = []
    checked = 0
    for res in compare_cases(which, a_max):
        checked += 1
        if res.printed_ok:
            continue
        head = ", ".join(f"N={N}: {x} vs {y}" for N, x, y in res.diff[:5])
        notes.append(
            f"case {res.case_index} at a={res.a} (A={res.A}): printed form differs from engine "
            f"in {len(res.diff)} of {DIFF_TERMS} coefficients ({head}, ...)"
        )
        if apply_errata and res.corrected_ok:
            notes.append(f"case {res.case_index} at a={res.a}: agrees after erratum")
            continue
        cx = {
            "case_index": res.case_index, "a": res.a, "A": res.A,
            "mismatches": len(res.diff), "first": list(res.diff[:5]),
        }
        return make_report(f"golden-{which}", rng, cx, checked, notes)
    return make_report(f"golden-{which}", rng, checked=checked, notes=notes)
