"""Machine checks of unimodality, difference identities and congruences."""

from .catalog import CATALOG, Identity, catalog_ids, check_all, check_identity_catalog
from .congruence import congruence_failures, congruence_scan, is_prime
from .golden import GoldenCase, check_appendix_goldens, compare_cases, load_golden
from .quasi import QuasiPolynomial, interpolate, quasipolynomial_extract
from .report import IdentityReport
from .unimodality import check_delta_nonneg, check_unimodality, difference_series

__all__ = [
    "CATALOG",
    "Identity",
    "IdentityReport",
    "QuasiPolynomial",
    "GoldenCase",
    "catalog_ids",
    "check_all",
    "check_identity_catalog",
    "check_unimodality",
    "check_delta_nonneg",
    "check_appendix_goldens",
    "compare_cases",
    "congruence_scan",
    "congruence_failures",
    "difference_series",
    "interpolate",
    "is_prime",
    "load_golden",
    "quasipolynomial_extract",
]
