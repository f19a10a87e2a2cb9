"""Monte-Carlo counterparts of the analytical SNR, capacity and noise results."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy import stats

from .alpha_stable import ComplexIsotropicNoise, make_complex_noise, mean_abs
from .capacity_bounds import (RationalAlpha, ergodic_capacity_lb_meijerg,
                              ergodic_capacity_lb_quadrature, outage_ub)
from .fading import NakagamiParams, sample_h
from .snr_model import SnrDistribution, snr_cdf

DEFAULT_SEED = 0xC15
_SHARD = 1_000_000
_HEAVY_TAIL_ALPHA = 1.5
_N_BATCHES = 20


@dataclass(frozen=True)
class McConfig:
    n_samples: int = 1_000_000
    seed: int = DEFAULT_SEED
    confidence_z: float = 3.0

    def __post_init__(self):
        if self.n_samples < 10_000:
            raise ValueError("n_samples must be at least 1e4")


@dataclass(frozen=True)
class Estimate:
    value: float
    se: float

    def within(self, target: float, z: float) -> bool:
        return abs(self.value - target) <= z * self.se


@dataclass(frozen=True)
class OutageEstimate(Estimate):
    count: int = 0
    n: int = 0

    def lower_limit(self, z: float) -> float:
        """One-sided Clopper-Pearson lower confidence limit at the normal-z level.

        Exact for binomial counts, so it stays meaningful when k is 0 or n and the
        normal approximation collapses.
        """
        if self.count == 0:
            return 0.0
        return float(stats.beta.ppf(stats.norm.sf(z), self.count, self.n - self.count + 1))


def _shards(cfg: McConfig, tag: int):
    """(generator, size) pairs from independent sub-seeds, in a fixed order."""
    sizes = [_SHARD] * (cfg.n_samples // _SHARD)
    if cfg.n_samples % _SHARD:
        sizes.append(cfg.n_samples % _SHARD)
    children = np.random.SeedSequence([cfg.seed, tag]).spawn(len(sizes))
    return [(np.random.default_rng(s), n) for s, n in zip(children, sizes)]


def sample_snr(dist: SnrDistribution, cfg: McConfig, tag: int = 0) -> np.ndarray:
    """gamma = gamma_bar/xi * |h|^alpha from sampled Nakagami amplitudes."""
    params = NakagamiParams(dist.m, dist.omega)
    h = np.concatenate([sample_h(params, rng, n) for rng, n in _shards(cfg, tag)])
    return dist.gamma_bar / dist.xi * h**dist.alpha


def mc_ergodic(dist: SnrDistribution, cfg: McConfig) -> Estimate:
    """Sample mean of (1/alpha) log2(1 + gamma)."""
    if dist.gamma_bar == 0:
        return Estimate(0.0, 0.0)
    c = np.log1p(sample_snr(dist, cfg, tag=1)) / (dist.alpha * math.log(2.0))
    return Estimate(float(c.mean()), float(c.std(ddof=1) / math.sqrt(c.size)))


def mc_outage(dist: SnrDistribution, gamma_th: float, cfg: McConfig) -> OutageEstimate:
    """Empirical P(gamma < gamma_th) with its binomial standard error.

    The SE uses (k + 1/2)/(n + 1) in place of k/n so it stays positive when no sample
    (or every sample) falls below the threshold.
    """
    g = sample_snr(dist, cfg, tag=2)
    k = int(np.count_nonzero(g < gamma_th))
    p_se = (k + 0.5) / (g.size + 1)
    return OutageEstimate(k / g.size, math.sqrt(p_se * (1 - p_se) / g.size), k, g.size)


def mc_noise_moments(noise: ComplexIsotropicNoise, cfg: McConfig) -> Estimate:
    """E|Re n| from samples; median of batch means when alpha < 1.5."""
    re = np.concatenate([noise.sample(rng, n).real for rng, n in _shards(cfg, 3)])
    a = np.abs(re)
    if noise.alpha < _HEAVY_TAIL_ALPHA:
        means = np.array([b.mean() for b in np.array_split(a, _N_BATCHES)])
        # normal-approximation SE of the median of batch means
        se = 1.2533 * means.std(ddof=1) / math.sqrt(_N_BATCHES)
        return Estimate(float(np.median(means)), float(se))
    return Estimate(float(a.mean()), float(a.std(ddof=1) / math.sqrt(a.size)))


def empirical_char_fn(x: np.ndarray, t) -> np.ndarray:
    """Real part of the empirical characteristic function (symmetric laws)."""
    t = np.atleast_1d(np.asarray(t, dtype=float))
    return np.array([np.mean(np.cos(ti * x)) for ti in t])


def chi_square_gof(dist: SnrDistribution, cfg: McConfig, n_bins: int = 50) -> float:
    """p-value of a chi-square test of sampled SNRs against ``snr_cdf`` on equiprobable bins."""
    g = sample_snr(dist, cfg, tag=4)
    edges = np.asarray(dist.quantile(np.linspace(0, 1, n_bins + 1)[1:-1]))
    observed = np.bincount(np.searchsorted(edges, g), minlength=n_bins)
    probs = np.diff(np.concatenate([[0.0], snr_cdf(dist, edges), [1.0]]))
    return float(stats.chisquare(observed, probs * g.size).pvalue)


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str


@dataclass
class ValidationReport:
    checks: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name, passed, detail):
        self.checks.append(CheckResult(name, bool(passed), detail))


def validate(cfg: McConfig = McConfig()) -> ValidationReport:
    """Compare every analytical object against its sampled counterpart."""
    rep = ValidationReport()
    z = cfg.confidence_z
    for m in (1.0, 5.0, 15.0):
        for alpha in (1.8, 1.9, 2.0):
            for gb in (10.0, 100.0):
                dist = SnrDistribution.from_gamma_bar(alpha, m, gb)
                tag = f"m={m:g} alpha={alpha:g} gbar={gb:g}"
                quad = ergodic_capacity_lb_quadrature(dist)
                mc = mc_ergodic(dist, cfg)
                rep.add(f"ergodic quadrature vs MC [{tag}]", mc.within(quad, z),
                        f"quad={quad:.6f} mc={mc.value:.6f}+-{mc.se:.1e}")
                closed = ergodic_capacity_lb_meijerg(dist, RationalAlpha.from_alpha(alpha))
                rep.add(f"ergodic Meijer-G vs quadrature [{tag}]",
                        abs(closed - quad) <= 1e-4 * quad, f"G={closed:.8f} quad={quad:.8f}")
                for th in (gb / 10, gb, 10 * gb):
                    ub = outage_ub(dist, th)
                    est = mc_outage(dist, th, cfg)
                    rep.add(f"outage bound vs MC [{tag} th={th:g}]",
                            ub >= est.lower_limit(z),
                            f"ub={ub:.6g} mc={est.value:.6g}+-{est.se:.1e}")
            pval = chi_square_gof(SnrDistribution.from_gamma_bar(alpha, m, 10.0), cfg)
            rep.add(f"SNR law chi-square [m={m:g} alpha={alpha:g}]", pval > 0.01,
                    f"p={pval:.3g}")
    for alpha in (1.8, 2.0):
        noise = make_complex_noise(alpha, 1.0)
        est = mc_noise_moments(noise, cfg)
        target = mean_abs(alpha, noise.quadrature_scale)
        rep.add(f"E|Re n| [alpha={alpha:g}]", est.within(target, z),
                f"target={target:.6f} mc={est.value:.6f}+-{est.se:.1e}")
        summed = noise.sample_summed(np.random.default_rng([cfg.seed, 5]), cfg.n_samples)
        phi = empirical_char_fn(summed, [0.5, 1.0, 2.0])
        ref = np.exp(-(noise.derived_scale * np.array([0.5, 1.0, 2.0])) ** alpha)
        rep.add(f"char. fn of n1+n2 [alpha={alpha:g}]", np.all(np.abs(phi - ref) <= 0.01),
                f"max dev={np.max(np.abs(phi - ref)):.2e}")
    return rep
