"""
Every MA(2) process sharing one autocovariance triple, by root flipping.

If z1, z2 are the roots of M(z) and neither has unit modulus, replacing a
root by its reciprocal leaves sigma2 * M(z) * M(1/z) unchanged up to the
scale of sigma2.  Each flip pattern (none, z1, z2, both) therefore gives a
process with the same autocovariances; sigma2 of the new process follows
from evaluating the generating function at z = 1:

    sigma2* = (gamma0 + 2 gamma1 + 2 gamma2) / M*(1)**2.

Since M(1) = (1 - z1)(1 - z2), this equals sigma2 times |z|**2 for each
flipped root z, which is how it is evaluated here.

This is independent of the quartic in ident and serves as its oracle.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import (
    AcfTriple,
    Invertibility,
    Ma2Params,
    invertibility,
    roots_of_M,
)
from .errors import UnitModulusRoot
from .ident import identify_invertible

__all__ = [
    "FLIP_PATTERNS",
    "DUPLICATE_TOL",
    "Version",
    "VersionSet",
    "enumerate_versions",
    "versions_from_acf",
]

FLIP_PATTERNS: tuple[frozenset, ...] = (
    frozenset(),
    frozenset({"z2"}),
    frozenset({"z1"}),
    frozenset({"z1", "z2"}),
)
DUPLICATE_TOL = 1e-9
UNIT_MODULUS_TOL = 1e-9


@dataclass(frozen=True)
class Version:
    params: Ma2Params
    flip_pattern: frozenset
    invertible: bool

    @property
    def flip_label(self) -> str:
        return "+".join(sorted(self.flip_pattern)) or "none"


@dataclass(frozen=True)
class VersionSet:
    versions: tuple[Version, ...]
    invertible_index: Optional[int]

    def __len__(self) -> int:
        return len(self.versions)

    def __iter__(self):
        return iter(self.versions)

    @property
    def invertible(self) -> Optional[Version]:
        if self.invertible_index is None:
            return None
        return self.versions[self.invertible_index]


def _same(p: Ma2Params, q: Ma2Params) -> bool:
    return max(
        abs(p.theta1 - q.theta1),
        abs(p.theta2 - q.theta2),
        abs(p.sigma2 - q.sigma2) / p.sigma2,
    ) <= DUPLICATE_TOL


def enumerate_versions(p: Ma2Params) -> VersionSet:
    """All distinct processes with the autocovariances of ``p``.

    A root is never paired with its own reciprocal: each selection keeps one
    of {z_i, 1/z_i} for i = 1 and one for i = 2.  For a complex-conjugate pair
    only the all-or-none flips keep the coefficients real.

    The count is 4 for distinct real roots and 2 for a conjugate pair.  When
    the roots coincide, or are mutual reciprocals, two patterns collapse and
    3 remain.

    Raises
    ------
    UnitModulusRoot
        If a root lies on the unit circle; then no version is invertible.
    """
    if invertibility(p).status is Invertibility.BOUNDARY:
        raise UnitModulusRoot("a root of M lies on the unit circle")
    roots = roots_of_M(p)
    if any(abs(abs(z) - 1.0) <= UNIT_MODULUS_TOL for z in (roots.z1, roots.z2)):
        raise UnitModulusRoot("a root of M lies on the unit circle")

    conjugate = not roots.is_real

    versions: list[Version] = []
    for pattern in FLIP_PATTERNS:
        if conjugate and len(pattern) == 1:
            continue
        v1 = 1.0 / roots.z1 if "z1" in pattern else roots.z1
        v2 = 1.0 / roots.z2 if "z2" in pattern else roots.z2
        # conjugate pairs give exactly real sums and products up to rounding
        theta1 = (v1 + v2).real + 0.0  # no negative zero
        theta2 = -(v1 * v2).real
        # sigma*^2 = (gamma0 + 2 gamma1 + 2 gamma2) / M*(1)^2; each flip of z_i
        # multiplies it by |z_i|^2, which avoids the cancellation in M(1) when
        # a root is near z = 1
        scale = 1.0
        for name, z in (("z1", roots.z1), ("z2", roots.z2)):
            if name in pattern:
                scale *= abs(z) ** 2
        q = Ma2Params(theta1, theta2, p.sigma2 * scale)
        if any(_same(v.params, q) for v in versions):
            continue
        inv = invertibility(q).status is Invertibility.INVERTIBLE
        versions.append(Version(q, pattern, inv))

    idx = [i for i, v in enumerate(versions) if v.invertible]
    return VersionSet(tuple(versions), idx[0] if idx else None)


def versions_from_acf(a: AcfTriple) -> VersionSet:
    """Identify the invertible version of ``a`` and flip its roots."""
    return enumerate_versions(identify_invertible(a).invertible_params)
