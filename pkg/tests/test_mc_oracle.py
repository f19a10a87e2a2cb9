import math

import numpy as np
import pytest
from scipy import stats

from lunarlink.alpha_stable import make_complex_noise, mean_abs
from lunarlink.capacity_bounds import ergodic_capacity_lb_quadrature, outage_ub
from lunarlink.mc_oracle import (DEFAULT_SEED, McConfig, OutageEstimate, empirical_char_fn,
                                 mc_ergodic, mc_noise_moments, mc_outage, sample_snr,
                                 validate)
from lunarlink.snr_model import SnrDistribution, snr_cdf


def test_config_validation():
    with pytest.raises(ValueError):
        McConfig(n_samples=100)
    assert McConfig().seed == DEFAULT_SEED == 0xC15


def test_ergodic_exponential_case():
    est = mc_ergodic(SnrDistribution.from_gamma_bar(2.0, 1.0, 10.0), McConfig(n_samples=10**7))
    assert est.within(1.4533, 3) or abs(est.value - 1.4533) < 1e-4


def test_ergodic_matches_quadrature():
    dist = SnrDistribution.from_physical(10.0, 1 / math.sqrt(2), 1.8, 15.0)
    est = mc_ergodic(dist, McConfig())
    assert est.within(ergodic_capacity_lb_quadrature(dist), 3)


def test_ergodic_zero_gamma_bar():
    est = mc_ergodic(SnrDistribution.from_gamma_bar(1.8, 1.0, 0.0), McConfig())
    assert est.value == 0.0 and est.se == 0.0


def test_outage_exponential_case():
    dist = SnrDistribution.from_gamma_bar(2.0, 1.0, 7.0)
    est = mc_outage(dist, 7.0, McConfig())
    assert est.within(1 - math.exp(-1), 3)
    assert mc_outage(dist, 0.0, McConfig()).value == 0.0


@pytest.mark.parametrize("m", [1.0, 5.0, 15.0])
@pytest.mark.parametrize("alpha", [1.8, 2.0])
def test_outage_dominance(m, alpha):
    cfg = McConfig(n_samples=200_000)
    dist = SnrDistribution.from_gamma_bar(alpha, m, 10.0)
    for th in (1.0, 10.0, 100.0):
        est = mc_outage(dist, th, cfg)
        assert outage_ub(dist, th) >= est.lower_limit(3)


def test_snr_samples_follow_cdf():
    dist = SnrDistribution.from_gamma_bar(1.9, 3.0, 5.0)
    g = np.sort(sample_snr(dist, McConfig(n_samples=200_000)))
    emp = np.arange(1, g.size + 1) / g.size
    assert np.max(np.abs(emp - snr_cdf(dist, g))) < 5e-3


def test_sharded_sampling_deterministic():
    dist = SnrDistribution.from_gamma_bar(1.8, 2.0, 3.0)
    cfg = McConfig(n_samples=2_500_000, seed=5)
    assert np.array_equal(sample_snr(dist, cfg), sample_snr(dist, cfg))
    assert not np.array_equal(sample_snr(dist, cfg)[:100],
                              sample_snr(dist, McConfig(n_samples=2_500_000, seed=6))[:100])


@pytest.mark.parametrize("alpha,sigma", [(2.0, 1 / math.sqrt(2)), (1.8, 1.0)])
def test_noise_real_part_mean_abs(alpha, sigma):
    # the real part is S(alpha, 0, sigma/sqrt(2))
    est = mc_noise_moments(make_complex_noise(alpha, sigma), McConfig())
    assert est.within(mean_abs(alpha, sigma / math.sqrt(2)), 3)


def test_noise_heavy_tail_batched():
    # infinite variance: the median of batch means is finite and stable across seeds
    noise = make_complex_noise(1.2, 1.0)
    a = mc_noise_moments(noise, McConfig(seed=1))
    b = mc_noise_moments(noise, McConfig(seed=2))
    target = mean_abs(1.2, 1 / math.sqrt(2))
    assert math.isfinite(a.value) and math.isfinite(b.value) and a.se > 0
    assert abs(a.value - b.value) < 0.1 * target
    assert 0.75 * target < a.value < 1.05 * target


def test_outage_boundary_se():
    dist = SnrDistribution.from_gamma_bar(2.0, 15.0, 100.0)
    est = mc_outage(dist, 1e-3, McConfig(n_samples=10_000))
    assert est.value == 0.0 and est.se > 0


def test_empirical_char_fn_gaussian(rng):
    x = rng.normal(size=400_000)
    np.testing.assert_allclose(empirical_char_fn(x, [0.5, 1.0]), np.exp(-np.array([0.125, 0.5])),
                               atol=5e-3)


def test_validate_suite_passes():
    report = validate(McConfig(n_samples=200_000))
    failed = [c for c in report.checks if not c.passed]
    assert report.passed, failed
    assert len(report.checks) >= 60


def test_clopper_pearson_lower_limit_edges():
    n = 200_000
    level = stats.norm.sf(3.0)
    full = OutageEstimate(1.0, 0.0, n, n)
    assert full.lower_limit(3.0) == pytest.approx(level ** (1.0 / n), rel=1e-12)
    assert OutageEstimate(0.0, 0.0, 0, n).lower_limit(3.0) == 0.0
    half = OutageEstimate(0.5, 0.0, n // 2, n)
    assert 0.5 - 3.2 * math.sqrt(0.25 / n) < half.lower_limit(3.0) < 0.5 - 2.8 * math.sqrt(0.25 / n)
