"""
Which sigma2 candidate belongs to a given (theta1, theta2).

The plane is cut by four strict predicates

    A: theta2 - theta1 < 1      B: theta2 + theta1 < 1
    C: theta2**2 < 1            D: theta1**2 + 4 theta2 > 0

and each region gets one of the labels x1..x4 of :mod:`ma2ident.ident`:

    case   predicates   sigma2
    1a/1b  A B C        x4
    2      ~A B C       x2
    3      A ~B C       x2
    5a/5b  A B ~C       x3
    6      ~A B ~C      x1
    7      ~A ~B ~C     x3
    8      A ~B ~C      x1

(~A ~B C is empty.)  The suffix a/b records whether D holds; only cases 1
and 5 can violate D.  On the line theta2 = -1, |theta1| > 2 the roots are
mutual reciprocals and x1 = x2.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .core import Ma2Params, acf_from_params, boundary_tag, boundary_tol
from .errors import CandidateInadmissible, DegenerateTheta2, Unclassifiable
from .ident import RESIDUAL_TOL, Candidate, acf_residual, sigma_candidates

__all__ = [
    "Ternary",
    "CorrectSigma",
    "RegionCase",
    "CASE_SIGMA",
    "CASE_RANK",
    "classify_region",
    "simplified_rule",
    "correct_sigma2",
    "candidate_rank",
]


class Ternary(enum.Enum):
    HOLDS = "holds"
    REVERSED = "reversed"
    BOUNDARY = "boundary"


class CorrectSigma(enum.Enum):
    X1 = "x1"
    X2 = "x2"
    X3 = "x3"
    X4 = "x4"
    X1_EQUALS_X2 = "x1=x2"

    @property
    def candidate(self) -> Candidate:
        if self is CorrectSigma.X1_EQUALS_X2:
            return Candidate.X1
        return Candidate[self.name]


CASE_SIGMA = {
    "1a": CorrectSigma.X4,
    "1b": CorrectSigma.X4,
    "2": CorrectSigma.X2,
    "3": CorrectSigma.X2,
    "5a": CorrectSigma.X3,
    "5b": CorrectSigma.X3,
    "6": CorrectSigma.X1,
    "7": CorrectSigma.X3,
    "8": CorrectSigma.X1,
    "reciprocal": CorrectSigma.X1_EQUALS_X2,
}

# (position in ascending order starting at 1, number of real candidates)
CASE_RANK = {
    "1a": (4, 4),
    "1b": (2, 2),
    "2": (3, 4),
    "3": (3, 4),
    "5a": (1, 4),
    "5b": (1, 2),
    "6": (2, 4),
    "7": (1, 4),
    "8": (2, 4),
}


@dataclass(frozen=True)
class RegionCase:
    case_id: str
    a_holds: Ternary
    b_holds: Ternary
    c_holds: Ternary
    d_holds: Ternary
    correct_sigma: Optional[CorrectSigma]

    @property
    def is_boundary(self) -> bool:
        return self.case_id == "boundary"


def _ternary(margin: float, tol: float) -> Ternary:
    # margin > 0 means the strict inequality holds
    if abs(margin) <= tol:
        return Ternary.BOUNDARY
    return Ternary.HOLDS if margin > 0 else Ternary.REVERSED


def classify_region(theta1: float, theta2: float) -> RegionCase:
    """Region of (theta1, theta2) and the candidate that is its sigma2.

    Points on the unit-root lines get ``case_id == "boundary"``; points on
    theta2 = +1 off those lines get ``"unclassified"`` (the table names no
    candidate there).  Both carry ``correct_sigma = None``.
    """
    if theta2 == 0:
        raise DegenerateTheta2("theta2 must be nonzero")
    tol = boundary_tol(theta1, theta2)
    A = _ternary(1.0 - (theta2 - theta1), tol)
    B = _ternary(1.0 - (theta2 + theta1), tol)
    C = _ternary(1.0 - abs(theta2), tol)
    D = _ternary(theta1 * theta1 + 4.0 * theta2, tol)

    def case(cid: str) -> RegionCase:
        return RegionCase(cid, A, B, C, D, CASE_SIGMA.get(cid))

    if boundary_tag(theta1, theta2) is not None:
        return case("boundary")
    if C is Ternary.BOUNDARY:
        return case("reciprocal" if theta2 < 0 else "unclassified")

    h = Ternary.HOLDS
    split = "b" if D is Ternary.REVERSED else "a"
    if C is h:
        if A is h and B is h:
            return case("1" + split)
        if B is h:
            return case("2")
        if A is h:
            return case("3")
        raise AssertionError("~A ~B C is empty")
    if A is h and B is h:
        return case("5" + split)
    if B is h:
        return case("6")
    if A is h:
        return case("8")
    return case("7")


def simplified_rule(theta1: float, theta2: float) -> CorrectSigma:
    """Four-way rule in terms of |1 - theta2| vs |theta1| and |theta2| vs 1.

    Raises
    ------
    Unclassifiable
        On the unit-root lines and on theta2 = +1, where no rule applies.
    """
    if theta2 == 0:
        raise DegenerateTheta2("theta2 must be nonzero")
    if boundary_tag(theta1, theta2) is not None:
        raise Unclassifiable("point lies on a unit-root boundary")
    tol = boundary_tol(theta1, theta2)
    gap = abs(1.0 - theta2) - abs(theta1)
    size = abs(theta2) - 1.0
    if gap > tol:
        return CorrectSigma.X4 if size < -tol else CorrectSigma.X3
    if gap < -tol:
        if size < -tol:
            return CorrectSigma.X2
        if size > tol:
            return CorrectSigma.X1
        if theta2 < 0:
            return CorrectSigma.X1_EQUALS_X2
    raise Unclassifiable(f"no rule covers theta=({theta1!r}, {theta2!r})")


def correct_sigma2(p: Ma2Params) -> float:
    """The candidate x_i that equals ``p.sigma2``, selected by region.

    Where the region table is silent (theta2 = +1) the candidate that, paired
    with (theta1, theta2), reproduces the autocovariances is returned.
    """
    region = classify_region(p.theta1, p.theta2)
    if region.is_boundary:
        raise Unclassifiable("point lies on a unit-root boundary")
    c = sigma_candidates(acf_from_params(p))
    if region.correct_sigma is not None:
        x = c.get(region.correct_sigma.candidate)
        if x is None:
            raise CandidateInadmissible(
                f"{region.correct_sigma.value} is not real for case {region.case_id}"
            )
        return x

    # theta2 = +1 forces gamma1 = 0 and makes theta1 = -gamma1/(x + gamma2)
    # indeterminate for the right x, so verify with the forward map instead
    a = acf_from_params(p)
    for x in c.positive_candidates().values():
        if acf_residual(Ma2Params(p.theta1, p.theta2, x), a) <= RESIDUAL_TOL:
            return x
    raise Unclassifiable("no candidate reproduces the autocovariances")


def candidate_rank(value: float, candidates) -> tuple[int, int]:
    """Position (1-based, ascending) of ``value`` among the positive candidates."""
    vals = sorted(candidates.positive_candidates().values())
    pos = min(range(len(vals)), key=lambda i: abs(vals[i] - value))
    return pos + 1, len(vals)
