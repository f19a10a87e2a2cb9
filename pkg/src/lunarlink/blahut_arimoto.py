"""Blahut-Arimoto capacity of the scalar fading channel Y = h X + N under E|X| <= P_c.

N is SaS with scale lambda_n. Input and output alphabets are uniform grids; the amplitude
cost enters the input update through a Lagrange multiplier nu <= 0. The ergodic value is a
Riemann sum over a quantile grid of the fading law.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

import numpy as np
from scipy import optimize
from scipy.special import gammaincinv

from .alpha_stable import sas_pdf_interpolated
from .errors import ConvergenceError, InfeasibleConstraintError
from .snr_model import SnrDistribution, snr_pdf

LN2 = math.log(2.0)
NU_BRACKET = (-50.0, 0.0)
_ROW_TOL = 1e-9


@dataclass(frozen=True)
class BaConfig:
    """Grid sizes and stopping rule.

    ``noise_span`` is the half-width, in units of lambda_n, added to the received-signal
    range on each side of the output grid.
    """

    p_c: float = 5.0
    epsilon: float = 1e-6
    max_iter: int = 2000
    m_x: int = 65
    m_n: int = 513
    x_max_factor: float = 4.0
    n_h: int = 40
    noise_span: float = 14.0

    def __post_init__(self):
        if not self.epsilon > 0:
            raise ValueError("epsilon must be positive")
        if self.m_x < 3 or self.m_n < 3:
            raise ValueError("alphabet sizes must be at least 3")
        if self.n_h < 1:
            raise ValueError("n_h must be at least 1")
        if self.max_iter < 3:
            raise ValueError("max_iter must be at least 3")
        if not (self.p_c > 0 and self.x_max_factor > 0 and self.noise_span > 0):
            raise ValueError("p_c, x_max_factor and noise_span must be positive")

    @property
    def x_max(self) -> float:
        return self.x_max_factor * self.p_c


@dataclass(frozen=True)
class DiscreteChannel:
    inputs: np.ndarray
    outputs: np.ndarray
    transition: np.ndarray
    gain: float = 1.0

    def __post_init__(self):
        t = self.transition
        if t.shape != (self.inputs.size, self.outputs.size):
            raise ValueError("transition must be M_X x M_N")
        if np.any(t < 0) or np.any(np.abs(t.sum(axis=1) - 1.0) > _ROW_TOL):
            raise ValueError("transition rows must be probability vectors")


@dataclass
class BaResult:
    capacity: float
    input_dist: np.ndarray
    nu: float
    iterations: int
    history: list = field(default_factory=list)

    def __iter__(self):
        # unpacks as (capacity, r)
        return iter((self.capacity, self.input_dist))


def build_channel(alpha: float, lambda_n: float, h: float, cfg: BaConfig) -> DiscreteChannel:
    """Discretize Y = h X + N on the configured grids."""
    if not lambda_n > 0 or h < 0:
        raise ValueError("need lambda_n > 0 and h >= 0")
    x = np.linspace(-cfg.x_max, cfg.x_max, cfg.m_x)
    reach = h * cfg.x_max + cfg.noise_span * lambda_n
    if not reach > 0:
        raise ValueError("degenerate output grid")
    y = np.linspace(-reach, reach, cfg.m_n)
    dy = y[1] - y[0]
    p = sas_pdf_interpolated(alpha, lambda_n, (y[None, :] - h * x[:, None]).ravel())
    p = p.reshape(cfg.m_x, cfg.m_n) * dy
    p /= p.sum(axis=1, keepdims=True)
    return DiscreteChannel(inputs=x, outputs=y, transition=p, gain=float(h))


def _tilted(score, cost, nu):
    e = score + nu * cost
    e = np.exp(e - e.max())
    return e / e.sum()


def ba_capacity(ch: DiscreteChannel, constraint: float, cfg: BaConfig) -> BaResult:
    """Capacity (bpcu) of ``ch`` subject to sum_x r(x) |h x| <= ``constraint``."""
    if not constraint > 0:
        raise ValueError("constraint must be positive")
    p = ch.transition
    cost = np.abs(ch.gain * ch.inputs)
    if cost.min() > constraint:
        raise InfeasibleConstraintError(
            f"smallest input cost {cost.min():.4g} exceeds the constraint {constraint:.4g}")
    log_p = np.log(np.where(p > 0, p, 1.0))
    r = np.full(ch.inputs.size, 1.0 / ch.inputs.size)
    history = []
    nu = 0.0
    for n in range(cfg.max_iter):
        q = r[:, None] * p
        q /= np.maximum(q.sum(axis=0, keepdims=True), 1e-300)
        log_q = np.log(np.maximum(q, 1e-300))
        log_r = np.log(np.maximum(r, 1e-300))
        c = float(np.sum(r[:, None] * p * (log_q - log_r[:, None])) / LN2)
        history.append(c)
        score = np.sum(p * log_q, axis=1)

        r_free = _tilted(score, cost, 0.0)
        if r_free @ cost <= constraint:
            nu, r = 0.0, r_free
        else:
            lo, hi = NU_BRACKET
            if _tilted(score, cost, lo) @ cost > constraint:
                raise InfeasibleConstraintError(
                    f"no multiplier in [{lo}, {hi}] meets E|X| <= {constraint:.4g}")
            nu = optimize.brentq(lambda v: _tilted(score, cost, v) @ cost - constraint,
                                 lo, hi, xtol=1e-13, rtol=1e-15)
            r = _tilted(score, cost, nu)
        # the uniform start may violate the constraint, so the first step can go down
        if n >= 2 and c - history[-2] <= cfg.epsilon:
            return BaResult(capacity=c, input_dist=r, nu=nu, iterations=n + 1, history=history)
    raise ConvergenceError(
        f"Blahut-Arimoto did not converge in {cfg.max_iter} iterations "
        f"(last increment {history[-1] - history[-2]:.3g})",
        achieved=history[-1] - history[-2])


@dataclass(frozen=True)
class FadingGrid:
    h: np.ndarray
    gamma: np.ndarray
    weights: np.ndarray
    raw_weight_sum: float


def fading_grid(dist: SnrDistribution, n_h: int, lo: float = 0.005, hi: float = 0.995) -> FadingGrid:
    """Quantile grid of the SNR law with normalized Riemann weights f(gamma_i) Delta_i."""
    if n_h == 1:
        g = np.atleast_1d(dist.quantile(0.5))
        h = np.sqrt(gammaincinv(dist.m, 0.5) / dist.m)
        return FadingGrid(h=np.array([h]), gamma=g, weights=np.ones(1), raw_weight_sum=1.0)
    probs = np.linspace(lo, hi, n_h)
    h = np.sqrt(gammaincinv(dist.m, probs) * dist.omega / dist.m)
    gamma = np.asarray(dist.quantile(probs), dtype=float)
    edges = np.concatenate([gamma[:1], 0.5 * (gamma[1:] + gamma[:-1]), gamma[-1:]])
    w = snr_pdf(dist, gamma) * np.diff(edges)
    raw = float(w.sum())
    if not 0.95 <= raw <= 1.0:
        warnings.warn(f"fading grid covers {raw:.4f} of the SNR mass", RuntimeWarning)
    return FadingGrid(h=h, gamma=gamma, weights=w / raw, raw_weight_sum=raw)


def ergodic_ba(alpha: float, lambda_n: float, dist: SnrDistribution, cfg: BaConfig) -> float:
    """Fading-averaged Blahut-Arimoto capacity in bpcu."""
    if dist.alpha != alpha:
        raise ValueError("alpha does not match the SNR distribution")
    grid = fading_grid(dist, cfg.n_h)
    caps = np.empty(grid.h.size)
    for i, h in enumerate(grid.h):
        ch = build_channel(alpha, lambda_n, float(h), cfg)
        try:
            caps[i] = ba_capacity(ch, cfg.p_c * float(h), cfg).capacity
        except ConvergenceError as exc:
            raise ConvergenceError(f"grid point {i} (h={h:.4g}): {exc}",
                                   achieved=exc.achieved) from exc
        except InfeasibleConstraintError as exc:
            raise InfeasibleConstraintError(f"grid point {i} (h={h:.4g}): {exc}") from exc
    return float(np.dot(grid.weights, caps))
