"""
Closed-form recovery of MA(2) coefficients from autocovariances.

Substituting theta1 = -gamma1 / (x + gamma2) and theta2 = -gamma2 / x into
gamma0 = x * (1 + theta1**2 + theta2**2) gives a palindromic-type quartic in
x = sigma2,

    x**4 + a1 x**3 + a2 x**2 + a1 k x + k**2 = 0,

    a1 = 2 gamma2 - gamma0,  a2 = 2 gamma2**2 - 2 gamma0 gamma2 + gamma1**2,
    k = gamma2**2.

Dividing by x**2 and writing w = x + k/x turns it into the quadratic
w**2 + a1 w + (a2 - 2k) = 0 with roots z_minus <= z_plus; each w then
yields two x from x**2 - w x + k = 0.  The four candidates are labelled

    x1, x2 = (z_minus -+ H_minus) / 2,    x3, x4 = (z_plus -+ H_plus) / 2,

where H = sqrt(w**2 - 4k).  The invertible version is always x4.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional

from .core import (
    AcfTriple,
    Invertibility,
    Ma2Params,
    acf_from_params,
    invertibility,
    spectral_minimum,
)
from .errors import CandidateInadmissible, InfeasibleAcf, NoInvertibleVersion

__all__ = [
    "Candidate",
    "QuarticCoeffs",
    "SigmaCandidates",
    "IdentResult",
    "RADICAND_RTOL",
    "RESIDUAL_TOL",
    "UNIT_ROOT_RTOL",
    "quartic_coeffs",
    "quartic_value",
    "sigma_candidates",
    "theta_from_candidate",
    "identify_invertible",
    "acf_residual",
]

#: radicands within this multiple of gamma0**2 of zero are treated as zero
RADICAND_RTOL = 1e-12
#: max relative (to gamma0) reconstruction error accepted by identification
RESIDUAL_TOL = 1e-9
#: spectral minimum below this multiple of gamma0 means a unit-modulus root
UNIT_ROOT_RTOL = 1e-12


class Candidate(enum.Enum):
    X1 = 1
    X2 = 2
    X3 = 3
    X4 = 4

    @property
    def label(self) -> str:
        return self.name.lower()


@dataclass(frozen=True)
class QuarticCoeffs:
    a1: float
    a2: float
    k: float

    @property
    def a3(self) -> float:
        return self.a1 * self.k

    @property
    def a4(self) -> float:
        return self.k * self.k


@dataclass(frozen=True)
class SigmaCandidates:
    """Intermediate quantities of the quadratic reduction.

    ``h_minus``, ``x1`` and ``x2`` are ``None`` when the z_minus branch has
    a negative discriminant (the two candidates are not real).
    """

    G: float
    z_minus: float
    z_plus: float
    h_minus: Optional[float]
    h_plus: float
    x1: Optional[float]
    x2: Optional[float]
    x3: float
    x4: float
    k: float

    def get(self, which: Candidate) -> Optional[float]:
        return getattr(self, which.label)

    def real_candidates(self) -> dict[Candidate, float]:
        out = {}
        for c in Candidate:
            v = self.get(c)
            if v is not None:
                out[c] = v
        return out

    def positive_candidates(self) -> dict[Candidate, float]:
        # x1 = x2 can be a real negative double root (theta1 = 0, complex roots)
        return {c: v for c, v in self.real_candidates().items() if v > 0}


@dataclass(frozen=True)
class IdentResult:
    invertible_params: Ma2Params
    candidates: SigmaCandidates
    residual: float


def quartic_coeffs(a: AcfTriple) -> QuarticCoeffs:
    g0, g1, g2 = a.as_tuple()
    return QuarticCoeffs(
        a1=2.0 * g2 - g0,
        a2=2.0 * g2 * g2 - 2.0 * g0 * g2 + g1 * g1,
        k=g2 * g2,
    )


def quartic_value(q: QuarticCoeffs, x: float) -> float:
    return (((x + q.a1) * x + q.a2) * x + q.a3) * x + q.a4


def _clamped_sqrt(radicand: float, scale: float) -> Optional[float]:
    # |radicand| <= RADICAND_RTOL * scale counts as an exact zero
    if abs(radicand) <= RADICAND_RTOL * scale:
        return 0.0
    if radicand < 0:
        return None
    return math.sqrt(radicand)


def _split(w: float, h: float, k: float) -> tuple[float, float]:
    """Both roots (w -+ h)/2 of x**2 - w x + k, without cancellation."""
    if h == 0:
        return 0.5 * w, 0.5 * w
    if w >= 0:
        big = 0.5 * (w + h)
        return (k / big if big != 0 else 0.5 * (w - h)), big
    small = 0.5 * (w - h)
    return small, (k / small if small != 0 else 0.5 * (w + h))


def sigma_candidates(a: AcfTriple) -> SigmaCandidates:
    """All four solutions of the sigma2 quartic, by quadratic reduction.

    Raises
    ------
    InfeasibleAcf
        If the reduction breaks down (G**2 < 0, z_plus branch not real, or
        x4 <= 0): the triple is not the autocovariance of an MA(2) process.
    """
    a.validate()
    g0, g1, g2 = a.as_tuple()
    k = g2 * g2
    scale = g0 * g0

    G = _clamped_sqrt((g0 - 2.0 * g1 + 2.0 * g2) * (g0 + 2.0 * g1 + 2.0 * g2), scale)
    if G is None:
        raise InfeasibleAcf("G**2 < 0: not the autocovariance of any MA(2) process")

    z_minus = 0.5 * (g0 - 2.0 * g2 - G)
    z_plus = 0.5 * (g0 - 2.0 * g2 + G)

    two_g2 = 2.0 * abs(g2)
    h_plus = _clamped_sqrt((z_plus - two_g2) * (z_plus + two_g2), scale)
    if h_plus is None:
        raise InfeasibleAcf("z_plus branch has no real sigma2 candidates")
    x3, x4 = _split(z_plus, h_plus, k)
    if not x4 > 0:
        raise InfeasibleAcf("largest candidate x4 is not positive")

    h_minus = _clamped_sqrt((z_minus - two_g2) * (z_minus + two_g2), scale)
    if h_minus is None:
        x1 = x2 = None
    else:
        x1, x2 = _split(z_minus, h_minus, k)

    return SigmaCandidates(
        G=G, z_minus=z_minus, z_plus=z_plus, h_minus=h_minus, h_plus=h_plus,
        x1=x1, x2=x2, x3=x3, x4=x4, k=k,
    )


def theta_from_candidate(
    a: AcfTriple, which: Candidate, c: SigmaCandidates
) -> tuple[float, float]:
    """(theta1, theta2) implied by taking candidate ``which`` as sigma2.

    Uses the closed forms in gamma, G and H directly, e.g. for x4::

        theta1 = -4 gamma1 / (gamma0 + 2 gamma2 + G + 2 H_plus)
        theta2 = -4 gamma2 / (gamma0 - 2 gamma2 + G + 2 H_plus)
    """
    g0, g1, g2 = a.as_tuple()
    if which in (Candidate.X1, Candidate.X2):
        if c.h_minus is None:
            raise CandidateInadmissible(f"{which.label} is not real")
        two_w, h = g0 - 2.0 * g2 - c.G, c.h_minus
    else:
        two_w, h = g0 - 2.0 * g2 + c.G, c.h_plus
    sign = -1.0 if which in (Candidate.X1, Candidate.X3) else 1.0

    # d2 = gamma0 - 2 gamma2 -+ G +- 2H; when the H term opposes the sign of
    # 2w it is formed from the product d2 * d2' = 16 k instead of by subtraction
    if two_w == 0 or (sign > 0) == (two_w > 0):
        d2 = two_w + sign * 2.0 * h
    else:
        conj = two_w - sign * 2.0 * h
        d2 = 16.0 * c.k / conj if conj != 0 else two_w + sign * 2.0 * h
    d1 = d2 + 4.0 * g2
    if d1 == 0 or d2 == 0 or not c.get(which) > 0:
        raise CandidateInadmissible(f"{which.label} gives a vanishing denominator")
    return -4.0 * g1 / d1, -4.0 * g2 / d2


def acf_residual(p: Ma2Params, a: AcfTriple) -> float:
    """Largest lag-wise reconstruction error, relative to gamma0."""
    b = acf_from_params(p)
    return max(abs(u - v) for u, v in zip(b.as_tuple(), a.as_tuple())) / a.gamma0


def identify_invertible(a: AcfTriple) -> IdentResult:
    """The unique invertible MA(2) with autocovariances ``a``.

    sigma2 is the candidate x4 and the coefficients come from the x4 closed
    form.  The answer is confirmed by the forward map, and rejected when the
    process has a root of unit modulus.

    Raises
    ------
    InfeasibleAcf
        ``a`` is not the autocovariance of any MA(2) process.
    NoInvertibleVersion
        The processes sharing ``a`` have a unit-modulus root.
    """
    a.validate()
    # near the corners of the triangle the radicands lose accuracy before
    # the spectral minimum does, so test for a unit root first
    if abs(spectral_minimum(a)) <= UNIT_ROOT_RTOL * a.gamma0:
        raise NoInvertibleVersion(
            "spectral density vanishes on the unit circle: unit-modulus root"
        )
    c = sigma_candidates(a)
    try:
        theta1, theta2 = theta_from_candidate(a, Candidate.X4, c)
    except CandidateInadmissible as exc:
        raise InfeasibleAcf(str(exc)) from exc
    if theta2 == 0:
        raise InfeasibleAcf("recovered theta2 is zero")
    p = Ma2Params(theta1, theta2, c.x4)

    residual = acf_residual(p, a)
    if not residual <= RESIDUAL_TOL:
        raise InfeasibleAcf(
            f"forward map does not reproduce the input (residual {residual:.3g})"
        )

    status = invertibility(p)
    if status.status is Invertibility.BOUNDARY:
        raise NoInvertibleVersion(
            f"polynomial has a unit-modulus root (boundary {status.tag.label})"
        )
    if status.status is not Invertibility.INVERTIBLE:
        raise NoInvertibleVersion("recovered process is not strictly invertible")
    return IdentResult(p, c, residual)
