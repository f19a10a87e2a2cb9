"""Meijer-G function by numerical Mellin-Barnes integration.

    G^{m,n}_{p,q}[z | a; b] = 1/(2 pi i) * integral over L of
        prod_{j<=m} Gamma(b_j - s) prod_{i<=n} Gamma(1 - a_i + s)
        / (prod_{j>m} Gamma(1 - b_j + s) prod_{i>n} Gamma(a_i - s)) * z^s ds

L is the vertical line Re(s) = c with c midway between the rightmost pole
a_i - 1 (i <= n) and the leftmost pole b_j (j <= m). For real parameters and z > 0
the integrand is conjugate-symmetric in Im(s), so G = (1/pi) * int_0^inf Re F(c + it) dt.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.polynomial.legendre import leggauss
from scipy.special import loggamma

from .errors import PoleCollisionError, UnsupportedOrderError

DEFAULT_MAX_ORDER = 128
_LOG_CUTOFF = math.log(1e-16)
_GL_NODES, _GL_WEIGHTS = leggauss(16)


@dataclass(frozen=True)
class MeijerGSpec:
    """Parameters of G^{m,n}_{p,q}[z | a_top; b_bottom].

    ``a_top`` holds all p upper parameters, the first ``n`` of which enter the numerator;
    ``b_bottom`` holds all q lower parameters, the first ``m`` in the numerator.
    """

    a_top: tuple
    n: int
    b_bottom: tuple
    m: int
    z: float

    def __post_init__(self):
        object.__setattr__(self, "a_top", tuple(float(a) for a in self.a_top))
        object.__setattr__(self, "b_bottom", tuple(float(b) for b in self.b_bottom))
        if not (0 <= self.n <= len(self.a_top)) or not (0 <= self.m <= len(self.b_bottom)):
            raise ValueError("require 0 <= n <= p and 0 <= m <= q")
        if not self.z > 0:
            raise ValueError("z must be positive")

    @property
    def p(self) -> int:
        return len(self.a_top)

    @property
    def q(self) -> int:
        return len(self.b_bottom)

    @property
    def order(self) -> int:
        return self.p + self.q


def contour_offset(spec: MeijerGSpec) -> float:
    left = max((a - 1.0 for a in spec.a_top[: spec.n]), default=-math.inf)
    right = min(spec.b_bottom[: spec.m], default=math.inf)
    if left >= right:
        raise PoleCollisionError(
            f"pole families overlap: rightmost a_i - 1 = {left}, leftmost b_j = {right}")
    if math.isinf(left) and math.isinf(right):
        return 0.0
    if math.isinf(left):
        return right - 0.5
    if math.isinf(right):
        return left + 0.5
    return 0.5 * (left + right)


def _log_integrand(spec: MeijerGSpec, s: np.ndarray) -> np.ndarray:
    a, b, m, n = spec.a_top, spec.b_bottom, spec.m, spec.n
    out = s * math.log(spec.z)
    for bj in b[:m]:
        out = out + loggamma(bj - s)
    for ai in a[:n]:
        out = out + loggamma(1.0 - ai + s)
    for bj in b[m:]:
        out = out - loggamma(1.0 - bj + s)
    for ai in a[n:]:
        out = out - loggamma(ai - s)
    return out


def _truncation(spec: MeijerGSpec, c: float) -> float:
    # extent where |F| drops below 1e-16 of its peak
    top = 16.0
    while True:
        t = np.linspace(0.0, top, int(4 * top) + 1)
        mag = _log_integrand(spec, c + 1j * t).real
        last = t[np.nonzero(mag >= mag.max() + _LOG_CUTOFF)[0][-1]]
        if last < 0.75 * top or top >= 1e4:
            return min(last + 1.0, top)
        top *= 2.0


def meijer_g(spec: MeijerGSpec, max_order: int = DEFAULT_MAX_ORDER) -> float:
    """Evaluate the Meijer-G function for real parameters and positive argument.

    The error is absolute, about 1e-16 times the peak of the integrand on the contour, so
    values far below that peak (e.g. z^b e^{-z} at large z) lose relative accuracy.
    """
    if spec.order > max_order:
        raise UnsupportedOrderError(
            f"order p+q = {spec.order} exceeds the contour limit {max_order}; "
            "use the quadrature path instead")
    delta = spec.m + spec.n - 0.5 * (spec.p + spec.q)
    if delta <= 0:
        raise ValueError("vertical contour diverges: need m + n > (p + q)/2")
    c = contour_offset(spec)
    top = _truncation(spec, c)
    rate = abs(math.log(spec.z)) + spec.order * math.log(2.0 + top + abs(c)) + 1.0
    width = min(0.5, 0.5 * math.pi / rate)
    edges = np.linspace(0.0, top, max(2, int(math.ceil(top / width)) + 1))
    lo, hi = edges[:-1], edges[1:]
    half = 0.5 * (hi - lo)
    t = (lo[:, None] + half[:, None] * (_GL_NODES + 1.0)).ravel()
    w = (half[:, None] * _GL_WEIGHTS).ravel()
    vals = np.exp(_log_integrand(spec, c + 1j * t)).real
    return float(vals @ w) / math.pi
