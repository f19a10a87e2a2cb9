"""Capacity and outage analysis of lunar links under SaS noise and Nakagami-m fading."""

from .alpha_stable import (ComplexIsotropicNoise, StableParams, char_fn, make_complex_noise,
                           mean_abs, sample, sas_pdf, sum_params)
from .blahut_arimoto import BaConfig, ba_capacity, build_channel, ergodic_ba, fading_grid
from .capacity_bounds import (RationalAlpha, capacity_lb, ergodic_capacity_lb_meijerg,
                              ergodic_capacity_lb_quadrature, outage_ub)
from .fading import NakagamiParams, alpha_moment, nakagami_pdf, rician_to_m, sample_h
from .snr_model import SnrDistribution, instantaneous_snr, snr_cdf, snr_pdf

__all__ = [
    "BaConfig", "ComplexIsotropicNoise", "NakagamiParams", "RationalAlpha", "SnrDistribution",
    "StableParams", "alpha_moment", "ba_capacity", "build_channel", "capacity_lb", "char_fn",
    "ergodic_ba", "ergodic_capacity_lb_meijerg", "ergodic_capacity_lb_quadrature",
    "fading_grid", "instantaneous_snr", "make_complex_noise", "mean_abs", "nakagami_pdf",
    "outage_ub", "rician_to_m", "sample", "sample_h", "sas_pdf", "snr_cdf", "snr_pdf",
    "sum_params",
]
