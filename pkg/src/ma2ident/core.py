"""
Domain types and elementary maps for MA(2) processes.

The process is

    X(t) = e(t) - theta1 * e(t-1) - theta2 * e(t-2),    Var e(t) = sigma2

with moving-average polynomial M(z) = z**2 - theta1 * z - theta2.  The
process is invertible when both roots of M lie strictly inside the unit
circle, equivalently when (theta1, theta2) is inside the triangle

    theta2 - theta1 < 1,  theta2 + theta1 < 1,  theta2**2 < 1.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional

from .errors import CandidateInadmissible, DegenerateTheta2, DomainError

__all__ = [
    "Ma2Params",
    "AcfTriple",
    "RootPair",
    "BoundaryKind",
    "BoundaryTag",
    "Invertibility",
    "InvertibilityResult",
    "BOUNDARY_RTOL",
    "boundary_tol",
    "boundary_tag",
    "acf_from_params",
    "params_from_acf_and_sigma2",
    "roots_of_M",
    "invertibility",
    "anderson_lhs",
    "spectral_minimum",
]

#: relative tolerance for "on a boundary line"; scaled by 1 + |theta1| + |theta2|
BOUNDARY_RTOL = 1e-9


@dataclass(frozen=True)
class Ma2Params:
    theta1: float
    theta2: float
    sigma2: float

    def __post_init__(self):
        for name in ("theta1", "theta2", "sigma2"):
            if not math.isfinite(getattr(self, name)):
                raise DomainError(f"{name} must be finite")
        if self.theta2 == 0:
            raise DegenerateTheta2("theta2 must be nonzero")
        if not self.sigma2 > 0:
            raise DomainError("sigma2 must be positive")

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.theta1, self.theta2, self.sigma2)


@dataclass(frozen=True)
class AcfTriple:
    """Autocovariances at lags 0, 1 and 2.

    Construction does not validate, because sample estimates may be
    degenerate (a constant path gives all zeros).  Operations that need a
    genuine MA(2) autocovariance call :meth:`validate` first.
    """

    gamma0: float
    gamma1: float
    gamma2: float

    def validate(self) -> "AcfTriple":
        g0, g1, g2 = self.gamma0, self.gamma1, self.gamma2
        if not all(math.isfinite(g) for g in (g0, g1, g2)):
            raise DomainError("autocovariances must be finite")
        if not g0 > 0:
            raise DomainError("gamma0 must be positive")
        if g2 == 0:
            raise DegenerateTheta2("gamma2 must be nonzero (theta2 must be nonzero)")
        if not abs(g1) < g0:
            raise DomainError("|gamma1| must be smaller than gamma0")
        if not abs(g2) < g0:
            raise DomainError("|gamma2| must be smaller than gamma0")
        return self

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.gamma0, self.gamma1, self.gamma2)


@dataclass(frozen=True)
class RootPair:
    z1: complex
    z2: complex

    @property
    def is_real(self) -> bool:
        return self.z1.imag == 0 and self.z2.imag == 0

    def moduli(self) -> tuple[float, float]:
        return (abs(self.z1), abs(self.z2))


class BoundaryKind(enum.Enum):
    ROOT_AT_PLUS_ONE = "a"
    ROOT_AT_MINUS_ONE = "b"
    ROOT_ON_UNIT_CIRCLE_COMPLEX = "c"


@dataclass(frozen=True)
class BoundaryTag:
    kind: BoundaryKind
    # angle of the unit-circle root, only for the complex kind
    lam: Optional[float] = None

    @property
    def label(self) -> str:
        return self.kind.value


class Invertibility(enum.Enum):
    INVERTIBLE = "invertible"
    NON_INVERTIBLE = "non-invertible"
    BOUNDARY = "boundary"


@dataclass(frozen=True)
class InvertibilityResult:
    status: Invertibility
    tag: Optional[BoundaryTag] = None


def boundary_tol(theta1: float, theta2: float) -> float:
    return BOUNDARY_RTOL * (1.0 + abs(theta1) + abs(theta2))


def boundary_tag(theta1: float, theta2: float) -> Optional[BoundaryTag]:
    """Which unit-root line (a), (b) or segment (c) the point lies on, if any.

    When the point is on both (a) and (b) (the vertex (0, 1)) the tag for
    (a) is returned.
    """
    tol = boundary_tol(theta1, theta2)
    if abs(1.0 - theta1 - theta2) <= tol:
        return BoundaryTag(BoundaryKind.ROOT_AT_PLUS_ONE)
    if abs(1.0 + theta1 - theta2) <= tol:
        return BoundaryTag(BoundaryKind.ROOT_AT_MINUS_ONE)
    if abs(theta2 + 1.0) <= tol and abs(theta1) < 2.0:
        lam = math.acos(max(-1.0, min(1.0, theta1 / 2.0)))
        return BoundaryTag(BoundaryKind.ROOT_ON_UNIT_CIRCLE_COMPLEX, lam)
    return None


def acf_from_params(p: Ma2Params) -> AcfTriple:
    t1, t2, s2 = p.theta1, p.theta2, p.sigma2
    return AcfTriple(
        gamma0=s2 * (1.0 + t1 * t1 + t2 * t2),
        gamma1=s2 * (-t1 + t1 * t2),
        gamma2=-s2 * t2,
    )


def params_from_acf_and_sigma2(a: AcfTriple, sigma2: float) -> Ma2Params:
    """Coefficients implied by a trial innovation variance.

    Raises
    ------
    CandidateInadmissible
        When ``sigma2 + gamma2 == 0`` (theta1 is undefined).
    """
    if not sigma2 > 0:
        raise DomainError("sigma2 must be positive")
    denom = sigma2 + a.gamma2
    if denom == 0:
        raise CandidateInadmissible(
            "sigma2 + gamma2 = 0: this sigma2 candidate cannot recover theta1"
        )
    return Ma2Params(-a.gamma1 / denom, -a.gamma2 / sigma2, sigma2)


def roots_of_M(p: Ma2Params) -> RootPair:
    """Roots of z**2 - theta1*z - theta2.

    Real roots use the cancellation-free form (larger root first, the other
    from the product -theta2); complex roots are returned as a conjugate
    pair with the positive imaginary part first.
    """
    t1, t2 = p.theta1, p.theta2
    disc = t1 * t1 + 4.0 * t2
    if disc >= 0:
        s = math.sqrt(disc)
        big = 0.5 * (t1 + math.copysign(s, t1))
        # big == 0 only if t1 == 0 and disc == 0, i.e. t2 == 0 (excluded)
        return RootPair(complex(big), complex(-t2 / big))
    im = 0.5 * math.sqrt(-disc)
    return RootPair(complex(0.5 * t1, im), complex(0.5 * t1, -im))


def invertibility(p: Ma2Params) -> InvertibilityResult:
    tag = boundary_tag(p.theta1, p.theta2)
    if tag is not None:
        return InvertibilityResult(Invertibility.BOUNDARY, tag)
    t1, t2 = p.theta1, p.theta2
    if t2 - t1 < 1 and t2 + t1 < 1 and t2 * t2 < 1:
        return InvertibilityResult(Invertibility.INVERTIBLE)
    return InvertibilityResult(Invertibility.NON_INVERTIBLE)


def anderson_lhs(a: AcfTriple, z: complex) -> complex:
    """Evaluate sum_{h=-2}^{2} gamma_h z**h with gamma_{-h} = gamma_h."""
    if z == 0:
        raise DomainError("z must be nonzero")
    z = complex(z)
    zi = 1.0 / z
    return a.gamma0 + a.gamma1 * (z + zi) + a.gamma2 * (z * z + zi * zi)


def spectral_minimum(a: AcfTriple) -> float:
    """Minimum over the unit circle of the autocovariance generating function.

    On z = exp(i*lam) the generating function is real and equals
    gamma0 + 2*gamma1*cos(lam) + 2*gamma2*cos(2*lam), a quadratic in
    u = cos(lam).  For an MA(2) autocovariance it equals
    sigma2 * |M(exp(i*lam))|**2, so it vanishes exactly when M has a root of
    unit modulus.  Evaluated without square roots, so its rounding error is
    a few ulps of gamma0.
    """
    g0, g1, g2 = a.gamma0, a.gamma1, a.gamma2
    # f(u) = (g0 - 2 g2) + 2 g1 u + 4 g2 u**2,  u in [-1, 1]
    vals = [g0 + 2.0 * g1 + 2.0 * g2, g0 - 2.0 * g1 + 2.0 * g2]
    if g2 > 0:
        u = -g1 / (4.0 * g2)
        if -1.0 < u < 1.0:
            vals.append(g0 - 2.0 * g2 - g1 * g1 / (4.0 * g2))
    return min(vals)

