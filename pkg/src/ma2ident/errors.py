"""Exception hierarchy shared by every module of the package."""


class Ma2Error(Exception):
    """Base class for all errors raised by ma2ident."""


class DomainError(Ma2Error, ValueError):
    """An input violates a documented invariant (theta2 = 0, sigma2 <= 0, ...)."""


class DegenerateTheta2(DomainError):
    pass


class PathTooShort(DomainError):
    pass


class InfeasibleAcf(Ma2Error):
    """The autocovariance triple is not that of any MA(2) with theta2 != 0."""


class NoInvertibleVersion(Ma2Error):
    """The MA polynomial has a root of unit modulus, so no version is invertible."""


class UnitModulusRoot(NoInvertibleVersion):
    pass


class CandidateInadmissible(Ma2Error, ArithmeticError):
    """A sigma^2 candidate cannot be turned into coefficients (not real, or zero denominator)."""


class Unclassifiable(Ma2Error):
    """The region table names no candidate for this (theta1, theta2)."""
