"""Regularized incomplete gamma functions.

Series expansion for x < a + 1, modified-Lentz continued fraction otherwise.
"""

from __future__ import annotations

import math

import numpy as np

_EPS = 1e-16
_TINY = 1e-300
_MAX_TERMS = 10_000


def _series_p(a: float, x: float) -> float:
    term = 1.0 / a
    total = term
    ap = a
    for _ in range(_MAX_TERMS):
        ap += 1.0
        term *= x / ap
        total += term
        if abs(term) < abs(total) * _EPS:
            break
    return total * math.exp(-x + a * math.log(x) - math.lgamma(a))


def _continued_fraction_q(a: float, x: float) -> float:
    b = x + 1.0 - a
    c = 1.0 / _TINY
    d = 1.0 / b
    h = d
    for i in range(1, _MAX_TERMS):
        an = -i * (i - a)
        b += 2.0
        d = an * d + b
        if abs(d) < _TINY:
            d = _TINY
        c = b + an / c
        if abs(c) < _TINY:
            c = _TINY
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _EPS:
            break
    return math.exp(-x + a * math.log(x) - math.lgamma(a)) * h


def _pq(a: float, x: float) -> tuple[float, float]:
    if not a > 0:
        raise ValueError("shape must be positive")
    if x < 0 or math.isnan(x):
        raise ValueError("x must be non-negative")
    if x == 0.0:
        return 0.0, 1.0
    if math.isinf(x):
        return 1.0, 0.0
    if x < a + 1.0:
        p = _series_p(a, x)
        return p, 1.0 - p
    q = _continued_fraction_q(a, x)
    return 1.0 - q, q


def gammainc_lower(a: float, x):
    """Regularized lower incomplete gamma P(a, x)."""
    x_arr = np.asarray(x, dtype=float)
    out = np.array([_pq(a, float(v))[0] for v in x_arr.ravel()]).reshape(x_arr.shape)
    return out if out.ndim else float(out)


def gammainc_upper(a: float, x):
    """Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x)."""
    x_arr = np.asarray(x, dtype=float)
    out = np.array([_pq(a, float(v))[1] for v in x_arr.ravel()]).reshape(x_arr.shape)
    return out if out.ndim else float(out)
