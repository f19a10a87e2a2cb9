import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, strategies as st
from scipy import integrate, stats

from lunarlink.alpha_stable import (ComplexIsotropicNoise, StableParams, char_fn,
                                    make_complex_noise, mean_abs, sample, sas_pdf,
                                    sas_pdf_interpolated, sum_params, tail_radius)
from lunarlink.errors import DivergenceError, UnsupportedParameterError

alphas = st.floats(1.05, 2.0)
scales = st.floats(0.1, 10.0)


def mp_density(alpha, z):
    """(1/pi) int_0^inf exp(-t^alpha) cos(t z) dt, fixed panels in mpmath."""
    mpmath.mp.dps = 30
    top = (40 * math.log(10)) ** (1 / alpha)
    nodes = [mpmath.mpf(top) * i / 400 for i in range(401)]
    val = mpmath.quad(lambda t: mpmath.exp(-t**alpha) * mpmath.cos(t * z), nodes)
    return float(val / mpmath.pi)


@pytest.mark.parametrize("alpha", [1.1, 1.5, 1.8, 1.9])
@pytest.mark.parametrize("z", [0.0, 0.3, 1.7, 4.0, 9.5])
def test_density_matches_mpmath(alpha, z):
    assert sas_pdf(alpha, 1.0, z) == pytest.approx(mp_density(alpha, z), rel=1e-10, abs=1e-15)


@pytest.mark.parametrize("alpha", [1.2, 1.8])
def test_density_tail_regions(alpha):
    # oscillatory panels and large-argument series against mpmath with many panels
    mpmath.mp.dps = 20
    for z in (20.0, 60.0):
        top = (40 * math.log(10)) ** (1 / alpha)
        nodes = [0] + [mpmath.pi * (i + 0.5) / z for i in range(int(top * z / math.pi))]
        ref = float(mpmath.quad(lambda t: mpmath.exp(-t**alpha) * mpmath.cos(t * z), nodes)
                    / mpmath.pi)
        assert sas_pdf(alpha, 1.0, z) == pytest.approx(ref, rel=1e-7)


@given(scales, st.floats(-30, 30))
def test_gaussian_case(scale, z):
    expected = stats.norm.pdf(z, scale=math.sqrt(2) * scale)
    assert sas_pdf(2.0, scale, z) == pytest.approx(expected, rel=1e-9, abs=1e-15)


@given(alphas, scales, st.floats(0, 100))
def test_density_symmetric_and_positive(alpha, scale, z):
    p = sas_pdf(alpha, scale, z)
    assert p >= 0
    assert p == sas_pdf(alpha, scale, -z)


@pytest.mark.parametrize("alpha", [1.3, 1.8, 2.0])
def test_density_normalized(alpha):
    body, _ = integrate.quad(lambda z: sas_pdf(alpha, 1.0, z), 0, 50, limit=400)
    tail, _ = integrate.quad(lambda z: sas_pdf(alpha, 1.0, z), 50, np.inf, limit=400)
    assert 2 * (body + tail) == pytest.approx(1.0, abs=1e-6)


def test_interpolated_density_close():
    z = np.linspace(-70, 70, 3001)
    for alpha in (1.5, 1.8, 2.0):
        np.testing.assert_allclose(sas_pdf_interpolated(alpha, 0.7, z), sas_pdf(alpha, 0.7, z),
                                   atol=1e-10)


def test_density_rejects():
    with pytest.raises(UnsupportedParameterError):
        sas_pdf(1.0, 1.0, 0.0)
    with pytest.raises(UnsupportedParameterError):
        sas_pdf(2.1, 1.0, 0.0)
    with pytest.raises(ValueError):
        sas_pdf(1.5, 1.0, np.inf)


def test_char_fn_symmetric_form():
    t = np.linspace(-3, 3, 13)
    p = StableParams(1.7, 0.0, 0.8)
    np.testing.assert_allclose(char_fn(p, t), np.exp(-(0.8 * np.abs(t)) ** 1.7))


def test_char_fn_rejects_alpha_one():
    with pytest.raises(UnsupportedParameterError):
        char_fn(StableParams(1.0), 1.0)


@pytest.mark.parametrize("params", [
    StableParams(1.8, 0.0, 1.3),
    StableParams(1.5, 0.7, 0.5, 0.2),
    StableParams(0.9, 1.0, 0.9),
    StableParams(0.6, -0.4, 1.0),
])
def test_samples_match_char_fn(params):
    x = sample(params, 11, 400_000)
    for t in (0.3, 1.0, 2.5):
        emp = np.mean(np.exp(1j * t * x))
        assert abs(emp - char_fn(params, t)) < 6 / math.sqrt(x.size)


def test_sample_scale_and_shift_affine():
    base = sample(StableParams(1.6), 5, 1000)
    moved = sample(StableParams(1.6, 0.0, 2.0, 3.0), 5, 1000)
    np.testing.assert_allclose(moved, 2.0 * base + 3.0)


def test_sample_rejects():
    with pytest.raises(UnsupportedParameterError):
        sample(StableParams(1.0), 0, 10)
    with pytest.raises(ValueError):
        sample(StableParams(1.5), 0, 0)


@given(st.floats(1.1, 2.0), scales)
def test_mean_abs_matches_quadrature(alpha, scale):
    # E|Z| = (2/pi) int_0^inf (1 - phi(t))/t^2 dt
    val, _ = integrate.quad(lambda t: -math.expm1(-(scale * t) ** alpha) / t**2, 0, np.inf,
                            limit=200)
    assert mean_abs(alpha, scale) == pytest.approx(2 * val / math.pi, rel=1e-7)


def test_mean_abs_divergent():
    with pytest.raises(DivergenceError):
        mean_abs(1.0, 1.0)
    with pytest.raises(DivergenceError):
        mean_abs(0.7, 1.0)


@given(st.floats(1.1, 2.0), scales, scales)
def test_sum_params_matches_char_fn_product(alpha, s1, s2):
    p1, p2 = StableParams(alpha, 0.0, s1), StableParams(alpha, 0.0, s2)
    total = sum_params(p1, p2)
    for t in (0.2, 1.0):
        assert char_fn(total, t) == pytest.approx(char_fn(p1, t) * char_fn(p2, t), rel=1e-12)


def test_sum_params_rejects_mismatch():
    with pytest.raises(UnsupportedParameterError):
        sum_params(StableParams(1.5), StableParams(1.6))


@pytest.mark.parametrize("alpha", [1.2, 1.6, 1.9])
def test_subordinator_laplace_transform(alpha):
    # E exp(-s A) = exp(-s^(alpha/2)) makes sqrt(A) G symmetric stable
    a = sample(make_complex_noise(alpha, 1.0).subordinator, 3, 400_000)
    assert np.all(a > 0)
    for s in (0.25, 1.0, 3.0):
        assert np.mean(np.exp(-s * a)) == pytest.approx(math.exp(-s ** (alpha / 2)), abs=5e-3)


@pytest.mark.parametrize("alpha", [1.5, 1.8, 2.0])
def test_complex_noise_scales(alpha):
    noise = ComplexIsotropicNoise(alpha, 1.3)
    z = noise.sample(17, 400_000)
    t = np.array([0.5, 1.0])
    for part in (z.real, z.imag):
        emp = np.array([np.mean(np.cos(ti * part)) for ti in t])
        np.testing.assert_allclose(emp, np.exp(-(noise.quadrature_scale * t) ** alpha), atol=6e-3)
    s = noise.sample_summed(17, 400_000)
    emp = np.array([np.mean(np.cos(ti * s)) for ti in t])
    np.testing.assert_allclose(emp, np.exp(-(noise.derived_scale * t) ** alpha), atol=6e-3)


def test_derived_scale_formula():
    noise = make_complex_noise(1.8, 2.0)
    assert noise.derived_scale == pytest.approx(2 ** (1 / 1.8 - 0.5) * 2.0)
    assert make_complex_noise(2.0, 1.0).subordinator is None


def test_tail_radius():
    for alpha in (1.5, 1.9):
        r = tail_radius(alpha, 1.0, 1e-4)
        tail, _ = integrate.quad(lambda z: sas_pdf(alpha, 1.0, z), r, np.inf, limit=400)
        assert 2 * tail == pytest.approx(1e-4, rel=0.05)
    assert 2 * stats.norm.sf(tail_radius(2.0, 1.0, 1e-6), scale=math.sqrt(2)) == pytest.approx(1e-6)
