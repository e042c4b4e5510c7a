"""Exception types raised by the perpgf library."""


class PerpGFError(Exception):
    """Base class for all library errors."""


class NonZeroRemainder(PerpGFError, ArithmeticError):
    """Exact polynomial division left a remainder."""

    def __init__(self, numerator, denominator, remainder):
        self.numerator = numerator
        self.denominator = denominator
        self.remainder = remainder
        super().__init__(
            f"division by {denominator} is not exact; remainder {remainder}"
        )


class PolynomialityViolation(PerpGFError):
    """An inner quotient of a numerator formula is not a polynomial."""

    def __init__(self, M, j, cause):
        self.M = M
        self.j = j
        self.cause = cause
        super().__init__(f"inner quotient for M={M}, j={j} is not a polynomial: {cause}")


class NegativeA(PerpGFError, ValueError):
    """Negative offset requested where no single rational GF exists."""


class DenominatorMismatch(PerpGFError, ValueError):
    """Two rational GFs were combined over different denominators."""


class UnknownIdentity(PerpGFError, KeyError):
    """Identity id not present in the catalog."""


class NotPrime(PerpGFError, ValueError):
    """Congruence modulus is not prime."""


class FitFailure(PerpGFError):
    """Quasipolynomial interpolation failed its prediction check."""
