"""
Sample paths of an MA(2) process and their sample autocovariances.

Innovations are Gaussian, drawn from numpy's PCG64 bit generator
(``numpy.random.default_rng(seed)``), so a given (params, n, seed) always
yields the same path.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import AcfTriple, Ma2Params
from .errors import DomainError, PathTooShort

__all__ = ["SimConfig", "SampleAcf", "simulate_path", "sample_acf"]

MIN_LENGTH = 3


@dataclass(frozen=True)
class SimConfig:
    params: Ma2Params
    n: int
    seed: int

    def __post_init__(self):
        if int(self.n) != self.n or self.n < MIN_LENGTH:
            raise PathTooShort(f"path length must be an integer >= {MIN_LENGTH}")
        if not 0 <= self.seed < 2**64:
            raise DomainError("seed must be a 64-bit unsigned integer")


@dataclass(frozen=True)
class SampleAcf:
    gamma_hat: AcfTriple
    n: int


def simulate_path(cfg: SimConfig) -> np.ndarray:
    """X(t) = e(t) - theta1 e(t-1) - theta2 e(t-2) for t = 0..n-1.

    The two pre-sample innovations e(-2), e(-1) are drawn explicitly, so no
    burn-in is needed.
    """
    p = cfg.params
    rng = np.random.default_rng(cfg.seed)
    e = rng.standard_normal(cfg.n + 2) * np.sqrt(p.sigma2)
    return e[2:] - p.theta1 * e[1:-1] - p.theta2 * e[:-2]


def sample_acf(path) -> SampleAcf:
    """Biased (divide-by-n) sample autocovariances at lags 0, 1, 2."""
    x = np.asarray(path, dtype=float)
    n = x.shape[0]
    if x.ndim != 1 or n < MIN_LENGTH:
        raise PathTooShort(f"need a 1-d path of length >= {MIN_LENGTH}, got {x.shape}")
    d = x - x.mean()
    g = [float(np.dot(d[: n - h], d[h:]) / n) for h in range(3)]
    return SampleAcf(AcfTriple(*g), n)
