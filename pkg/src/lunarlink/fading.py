"""Nakagami-m fading amplitudes."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import gammaln

from .errors import UnsupportedParameterError


@dataclass(frozen=True)
class NakagamiParams:
    m: float
    omega: float = 1.0

    def __post_init__(self):
        if not self.m >= 0.5:
            raise UnsupportedParameterError(f"m must be >= 0.5, got {self.m}")
        if not self.omega > 0.0:
            raise UnsupportedParameterError(f"omega must be positive, got {self.omega}")


def nakagami_pdf(params: NakagamiParams, x):
    """2 m^m x^(2m-1) exp(-m x^2/omega) / (Gamma(m) omega^m)."""
    x = np.asarray(x, dtype=float)
    if np.any(x < 0):
        raise ValueError("amplitude must be non-negative")
    m, om = params.m, params.omega
    with np.errstate(divide="ignore"):
        log_pdf = (math.log(2.0) + m * math.log(m) - gammaln(m) - m * math.log(om)
                   + (2 * m - 1) * np.log(x) - m * x**2 / om)
    out = np.exp(log_pdf)
    return out if out.ndim else float(out)


def sample_h(params: NakagamiParams, seed, n: int) -> np.ndarray:
    """Amplitudes |h| = sqrt(g) with g ~ Gamma(shape=m, scale=omega/m)."""
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    return np.sqrt(rng.gamma(params.m, params.omega / params.m, size=n))


def alpha_moment(params: NakagamiParams, alpha: float) -> float:
    """xi = E|h|^alpha = Gamma(m + alpha/2)/Gamma(m) * (omega/m)^(alpha/2)."""
    m = params.m
    return math.exp(gammaln(m + alpha / 2.0) - gammaln(m)) * (params.omega / m) ** (alpha / 2.0)


def rician_to_m(k_factor: float) -> float:
    """Nakagami shape matching a Rician K factor: (K+1)^2/(2K+1)."""
    if k_factor < 0:
        raise ValueError("K must be non-negative")
    return (k_factor + 1.0) ** 2 / (2.0 * k_factor + 1.0)
