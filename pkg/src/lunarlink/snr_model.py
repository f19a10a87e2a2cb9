"""Instantaneous SNR under SaS noise and Nakagami-m fading.

The SNR is defined through the ratio of amplitude constraint to mean absolute noise,

    gamma = (P_c |h| pi / (2 lambda_n Gamma(1 - 1/alpha)))^alpha,

and gamma_bar = E[gamma] = xi * (P_c pi / (2 lambda_n Gamma(1 - 1/alpha)))^alpha with
xi = E|h|^alpha, so that gamma * xi / gamma_bar = |h|^alpha.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import gammaln

from .errors import UnsupportedParameterError
from .fading import NakagamiParams, alpha_moment
from .special import gammainc_lower


def _check_alpha(alpha):
    if not (1.0 < alpha <= 2.0):
        raise UnsupportedParameterError(f"alpha must lie in (1, 2], got {alpha}")


def _snr_per_amplitude(alpha, lambda_n):
    return math.pi / (2.0 * lambda_n * math.gamma(1.0 - 1.0 / alpha))


def instantaneous_snr(p_c, h_abs, alpha, lambda_n):
    _check_alpha(alpha)
    if not lambda_n > 0:
        raise ValueError("lambda_n must be positive")
    ratio = np.asarray(p_c, dtype=float) * np.asarray(h_abs, dtype=float)
    out = (ratio * _snr_per_amplitude(alpha, lambda_n)) ** alpha
    return out if np.ndim(out) else float(out)


def gamma_bar_from(p_c, lambda_n, alpha, xi):
    _check_alpha(alpha)
    if not lambda_n > 0:
        raise ValueError("lambda_n must be positive")
    return xi * (p_c * _snr_per_amplitude(alpha, lambda_n)) ** alpha


@dataclass(frozen=True)
class SnrDistribution:
    """Parameters of the SNR law; omega is pinned to 1 (see ``general_snr_density``)."""

    alpha: float
    m: float
    omega: float
    xi: float
    gamma_bar: float

    def __post_init__(self):
        _check_alpha(self.alpha)
        if self.omega != 1.0:
            raise UnsupportedParameterError(
                "the SNR density only normalizes at omega = 1; use general_snr_density for "
                "diagnostic evaluation at other omega")
        if not self.m >= 0.5:
            raise UnsupportedParameterError("m must be >= 0.5")
        if not (self.xi > 0 and self.gamma_bar >= 0):
            raise ValueError("xi must be positive and gamma_bar non-negative")

    @classmethod
    def from_gamma_bar(cls, alpha, m, gamma_bar):
        xi = alpha_moment(NakagamiParams(m, 1.0), alpha)
        return cls(alpha=alpha, m=m, omega=1.0, xi=xi, gamma_bar=gamma_bar)

    @classmethod
    def from_physical(cls, p_c, lambda_n, alpha, m):
        xi = alpha_moment(NakagamiParams(m, 1.0), alpha)
        return cls(alpha=alpha, m=m, omega=1.0, xi=xi,
                   gamma_bar=gamma_bar_from(p_c, lambda_n, alpha, xi))

    @property
    def fading(self) -> NakagamiParams:
        return NakagamiParams(self.m, self.omega)

    def normalized(self, gamma):
        """|h|^alpha corresponding to SNR ``gamma``."""
        return np.asarray(gamma, dtype=float) * self.xi / self.gamma_bar

    def quantile(self, prob):
        """Inverse of ``snr_cdf``."""
        from scipy.special import gammaincinv

        u = gammaincinv(self.m, np.asarray(prob, dtype=float)) * self.omega / self.m
        return self.gamma_bar / self.xi * u ** (self.alpha / 2.0)


def general_snr_density(gamma, alpha, m, omega, xi, gamma_bar):
    """SNR density as printed, valid for any omega (integrates to omega^(m-1))."""
    g = np.asarray(gamma, dtype=float)
    if np.any(g <= 0):
        raise ValueError("gamma must be positive")
    y = g * xi / gamma_bar
    log_f = (math.log(2.0) + m * math.log(m) - math.log(omega) - math.log(alpha) - gammaln(m)
             - np.log(g) - (m / omega) * y ** (2.0 / alpha) + (2.0 * m / alpha) * np.log(y))
    out = np.exp(log_f)
    return out if out.ndim else float(out)


def snr_pdf(dist: SnrDistribution, gamma):
    return general_snr_density(gamma, dist.alpha, dist.m, dist.omega, dist.xi, dist.gamma_bar)


def snr_cdf(dist: SnrDistribution, gamma):
    """P(m, (m/omega) (gamma xi/gamma_bar)^(2/alpha))."""
    g = np.asarray(gamma, dtype=float)
    if np.any(g < 0):
        raise ValueError("gamma must be non-negative")
    x = (dist.m / dist.omega) * dist.normalized(g) ** (2.0 / dist.alpha)
    return gammainc_lower(dist.m, x)
