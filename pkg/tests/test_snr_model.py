import math

import numpy as np
import pytest
from hypothesis import given, strategies as st
from scipy import integrate

from lunarlink.errors import UnsupportedParameterError
from lunarlink.fading import sample_h
from lunarlink.snr_model import (SnrDistribution, gamma_bar_from, instantaneous_snr,
                                 general_snr_density, snr_cdf, snr_pdf)

alphas = st.sampled_from([1.8, 1.9, 2.0, 1.5, 1.25])
ms = st.floats(0.5, 20.0)
gbars = st.floats(1e-2, 1e4)


def integrate_pdf(dist, lo=0.0, hi=np.inf):
    q = [float(v) for v in dist.quantile([0.25, 0.5, 0.75])]
    cuts = [c for c in [lo] + q + [hi] if lo <= c <= hi]
    return sum(integrate.quad(lambda g: snr_pdf(dist, g), a, b, limit=200, epsabs=1e-12)[0]
               for a, b in zip(cuts[:-1], cuts[1:]))


@given(alphas, ms, gbars)
def test_pdf_integrates_to_one(alpha, m, gb):
    assert integrate_pdf(SnrDistribution.from_gamma_bar(alpha, m, gb)) == pytest.approx(1, abs=1e-6)


@given(alphas, ms, gbars, st.floats(0.01, 0.99))
def test_cdf_is_integral_of_pdf(alpha, m, gb, p):
    dist = SnrDistribution.from_gamma_bar(alpha, m, gb)
    g = float(dist.quantile(p))
    assert integrate_pdf(dist, 0.0, g) == pytest.approx(snr_cdf(dist, g), abs=1e-7)
    assert snr_cdf(dist, g) == pytest.approx(p, abs=1e-12)


@given(alphas, ms, gbars)
def test_mean_is_gamma_bar(alpha, m, gb):
    dist = SnrDistribution.from_gamma_bar(alpha, m, gb)
    q = [float(v) for v in dist.quantile([0.5, 0.99])]
    mean = sum(integrate.quad(lambda g: g * snr_pdf(dist, g), a, b, limit=200)[0]
               for a, b in [(0, q[0]), (q[0], q[1]), (q[1], np.inf)])
    assert mean == pytest.approx(gb, rel=1e-6)


@pytest.mark.parametrize("omega", [0.5, 2.0])
def test_lemma1_mass_off_unit_omega(omega):
    # the printed density carries omega^(m-1) of mass when omega != 1
    m, alpha, xi, gb = 3.0, 1.8, 0.9, 20.0
    total, _ = integrate.quad(lambda g: general_snr_density(g, alpha, m, omega, xi, gb), 0, np.inf,
                              limit=400)
    assert total == pytest.approx(omega ** (m - 1), rel=1e-6)


def test_omega_pinned():
    with pytest.raises(UnsupportedParameterError):
        SnrDistribution(alpha=2.0, m=1.0, omega=2.0, xi=1.0, gamma_bar=1.0)


def test_exponential_case():
    dist = SnrDistribution.from_gamma_bar(2.0, 1.0, 4.0)
    g = np.linspace(0.1, 30, 20)
    np.testing.assert_allclose(snr_pdf(dist, g), np.exp(-g / 4) / 4, rtol=1e-12)
    np.testing.assert_allclose(snr_cdf(dist, g), -np.expm1(-g / 4), rtol=1e-12)


def test_physical_mapping_matches_samples():
    alpha, m, p_c, lam = 1.8, 5.0, 3.0, 0.6
    dist = SnrDistribution.from_physical(p_c, lam, alpha, m)
    h = sample_h(dist.fading, 9, 400_000)
    g = instantaneous_snr(p_c, h, alpha, lam)
    assert np.mean(g) == pytest.approx(dist.gamma_bar, rel=5e-3)
    assert dist.gamma_bar == pytest.approx(gamma_bar_from(p_c, lam, alpha, dist.xi))


def test_snr_is_ratio_to_mean_abs_noise():
    from lunarlink.alpha_stable import mean_abs
    for alpha in (1.5, 2.0):
        assert instantaneous_snr(2.0, 1.0, alpha, 0.7) == pytest.approx(
            (2.0 / mean_abs(alpha, 0.7)) ** alpha)


def test_rejections():
    with pytest.raises(UnsupportedParameterError):
        SnrDistribution.from_gamma_bar(1.0, 1.0, 1.0)
    with pytest.raises(UnsupportedParameterError):
        SnrDistribution.from_gamma_bar(2.0, 0.3, 1.0)
    with pytest.raises(ValueError):
        instantaneous_snr(1.0, 1.0, 2.0, 0.0)
    dist = SnrDistribution.from_gamma_bar(2.0, 1.0, 1.0)
    with pytest.raises(ValueError):
        snr_pdf(dist, 0.0)
    with pytest.raises(ValueError):
        snr_cdf(dist, -1.0)


def test_quantile_edges():
    dist = SnrDistribution.from_gamma_bar(1.9, 2.0, 10.0)
    assert dist.quantile(0.0) == 0.0
    assert math.isinf(dist.quantile(1.0))
