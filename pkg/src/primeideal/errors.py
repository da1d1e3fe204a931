"""Exception hierarchy shared across the package."""


class PrimeIdealError(Exception):
    """Base class for every error raised by this package."""


class DimensionError(PrimeIdealError, ValueError):
    pass


class RankDeficient(PrimeIdealError, ValueError):
    """The matrix does not have full row rank."""


class Singular(PrimeIdealError, ValueError):
    pass


class NotUnimodular(PrimeIdealError, ValueError):
    """The matrix is not invertible modulo the requested modulus."""


class NotADomain(PrimeIdealError, ValueError):
    """A nonzero element has norm zero, so the table cannot describe a domain."""


class InvalidPresentation(PrimeIdealError, ValueError):
    pass


class CapExceeded(PrimeIdealError, ValueError):
    """The quotient is too large to enumerate."""
