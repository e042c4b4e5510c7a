"""Exact perpendicular generating functions for Gaussian-polynomial coefficients."""

from .engine import (
    PerpIndex,
    RationalGF,
    decompose,
    expand,
    gf_equal,
    gf_sub,
    numerator_even,
    numerator_odd,
    perp_gf,
)
from .errors import (
    DenominatorMismatch,
    FitFailure,
    NegativeA,
    NonZeroRemainder,
    NotPrime,
    PerpGFError,
    PolynomialityViolation,
    UnknownIdentity,
)
from .partitions import (
    PartitionTable,
    delta_atmost,
    delta_bounded,
    is_unimodal,
    p_atmost,
    p_bounded,
    p_parts_in,
)
from .poly import Poly, dissect, gaussian_poly, pochhammer, poly_add, poly_exact_div, poly_mul

__version__ = "0.1.0"
