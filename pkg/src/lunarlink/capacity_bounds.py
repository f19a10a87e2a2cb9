"""Capacity and outage bounds for the SaS-noise Nakagami-m channel."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy import integrate
from scipy.special import gammaln

from .errors import ConvergenceError, UnsupportedParameterError
from .meijerg import DEFAULT_MAX_ORDER, MeijerGSpec, meijer_g
from .snr_model import SnrDistribution, snr_pdf
from .special import gammainc_lower

LN2 = math.log(2.0)


def capacity_lb(ratio, alpha):
    """(1/alpha) log2(1 + ratio^alpha), ratio = P_c / E|N|."""
    if not (1.0 < alpha <= 2.0):
        raise UnsupportedParameterError(f"alpha must lie in (1, 2], got {alpha}")
    ratio = np.asarray(ratio, dtype=float)
    if np.any(ratio < 0):
        raise ValueError("ratio must be non-negative")
    out = np.log1p(ratio**alpha) / (alpha * LN2)
    return out if out.ndim else float(out)


def ergodic_capacity_lb_quadrature(dist: SnrDistribution, tol: float = 1e-6) -> float:
    """(1/alpha) * integral of log2(1 + gamma) f(gamma) over (0, inf), adaptive quadrature."""
    if dist.gamma_bar == 0:
        return 0.0

    def integrand(g):
        return math.log1p(g) * snr_pdf(dist, g)

    # split at the quartiles of the law so the peak is resolved at any spread
    q1, med, q3 = (float(v) for v in dist.quantile([0.25, 0.5, 0.75]))
    pieces = [(0.0, q1), (q1, med), (med, q3), (q3, 4 * q3), (4 * q3, math.inf)]
    total, err = 0.0, 0.0
    for lo, hi in pieces:
        val, e = integrate.quad(integrand, lo, hi, limit=200, epsabs=tol * 1e-3, epsrel=1e-11)
        total += val
        err += e
    total /= dist.alpha * LN2
    err /= dist.alpha * LN2
    if err > tol:
        raise ConvergenceError(f"quadrature error estimate {err:.3g} exceeds {tol:g}",
                               achieved=err)
    return total


@dataclass(frozen=True)
class RationalAlpha:
    """2/alpha = l/k in lowest terms."""

    l: int
    k: int

    def __post_init__(self):
        if self.l < 1 or self.k < 1:
            raise ValueError("l and k must be positive integers")
        if math.gcd(self.l, self.k) != 1:
            raise ValueError("l/k must be in lowest terms")
        if not (self.k <= self.l < 2 * self.k):
            raise UnsupportedParameterError("alpha = 2k/l must lie in (1, 2]")

    @property
    def alpha(self) -> float:
        return 2.0 * self.k / self.l

    @classmethod
    def from_alpha(cls, alpha: float, max_denominator: int = 100) -> "RationalAlpha":
        frac = Fraction(2.0 / alpha).limit_denominator(max_denominator)
        if abs(2.0 * frac.denominator / frac.numerator - alpha) > 1e-12:
            raise UnsupportedParameterError(f"2/alpha = {2 / alpha} is not a small rational")
        return cls(frac.numerator, frac.denominator)


def _index_list(rho: int, iota: float) -> list[float]:
    return [(iota + i) / rho for i in range(rho)]


def bound_g_spec(dist: SnrDistribution, ra: RationalAlpha) -> MeijerGSpec:
    l, k, m, om = ra.l, ra.k, dist.m, dist.omega
    z = math.exp(l * math.log(dist.xi / dist.gamma_bar) - k * math.log(k * om / m))
    upper = _index_list(l, 0) + _index_list(l, 1)
    lower = _index_list(k, m) + _index_list(l, 0) + _index_list(l, 0)
    return MeijerGSpec(a_top=upper, n=l, b_bottom=lower, m=k + 2 * l, z=z)


def ergodic_capacity_lb_meijerg(dist: SnrDistribution, ra: RationalAlpha,
                                max_order: int = DEFAULT_MAX_ORDER) -> float:
    """Closed-form ergodic bound through G^{k+2l, l}_{2l, k+2l}."""
    if abs(ra.alpha - dist.alpha) > 1e-12:
        raise ValueError("RationalAlpha does not match the distribution's alpha")
    if dist.gamma_bar == 0:
        return 0.0
    l, k, m, om = ra.l, ra.k, dist.m, dist.omega
    log_pref = ((m - 1) * math.log(om) + math.log(l) - math.log(2 * LN2) - gammaln(m)
                + 0.5 * ((2 * m - 3) * math.log(k) - (2 * l + k - 3) * math.log(2 * math.pi)))
    return math.exp(log_pref) * meijer_g(bound_g_spec(dist, ra), max_order=max_order)


def outage_ub(dist: SnrDistribution, gamma_th):
    """Omega^(m-1)/Gamma(m) * [Gamma(m) - Gamma(m, x)], Gamma(m, .) the upper incomplete gamma.

    With x = (m/omega)(gamma_th xi/gamma_bar)^(2/alpha) this is Omega^(m-1) P(m, x).
    """
    g = np.asarray(gamma_th, dtype=float)
    if np.any(g < 0):
        raise ValueError("threshold must be non-negative")
    if dist.gamma_bar == 0:
        out = np.where(g > 0, 1.0, 0.0)
        return out if out.ndim else float(out)
    x = (dist.m / dist.omega) * (g * dist.xi / dist.gamma_bar) ** (2.0 / dist.alpha)
    out = dist.omega ** (dist.m - 1) * np.asarray(gammainc_lower(dist.m, x))
    return out if out.ndim else float(out)
