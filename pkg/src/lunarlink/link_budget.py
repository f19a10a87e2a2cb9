"""Lunar link budget: antenna gains, Friis power, noise temperature and SaS scale mapping."""

from __future__ import annotations

import math
from dataclasses import dataclass

SPEED_OF_LIGHT = 2.998e8
BOLTZMANN = 1.380649e-23
MOON_RADIUS = 1.737e6
T_CMB = 2.725
HPBW_DEG_PER_WAVELENGTH = 70.0

NORMALIZATIONS = ("complex", "passband")


def db(x: float) -> float:
    return 10.0 * math.log10(x)


def from_db(x_db: float) -> float:
    return 10.0 ** (x_db / 10.0)


@dataclass(frozen=True)
class AntennaSpec:
    diameter: float
    aperture_efficiency: float
    rad_efficiency: float = 0.95
    physical_temp: float = 300.0

    def __post_init__(self):
        if not (self.diameter > 0 and self.physical_temp >= 0):
            raise ValueError("diameter must be positive and temperature non-negative")
        for eta in (self.aperture_efficiency, self.rad_efficiency):
            if not 0 < eta <= 1:
                raise ValueError("efficiencies must lie in (0, 1]")


@dataclass(frozen=True)
class RfChain:
    loss_tx_db: float = 1.0
    loss_rx_db: float = 3.0
    receiver_temp: float = 50.0
    line_temp: float = 300.0
    line_efficiency: float = 0.99
    cmb_temp: float = T_CMB

    def __post_init__(self):
        if self.loss_tx_db < 0 or self.loss_rx_db < 0:
            raise ValueError("losses must be non-negative dB")
        if min(self.receiver_temp, self.line_temp, self.cmb_temp) < 0:
            raise ValueError("temperatures must be non-negative")
        if not 0 < self.line_efficiency <= 1:
            raise ValueError("line efficiency must lie in (0, 1]")


@dataclass(frozen=True)
class Geometry:
    distance: float
    moon_distance: float | None = None
    moon_radius: float = MOON_RADIUS

    def __post_init__(self):
        if not self.distance > 0:
            raise ValueError("distance must be positive")
        if self.moon_distance is None:
            object.__setattr__(self, "moon_distance", self.distance)
        if self.moon_distance < self.moon_radius:
            raise ValueError("moon distance is inside the Moon")


@dataclass(frozen=True)
class NoiseBudget:
    t_op: float
    n0: float
    noise_power: float
    sigma: float
    lambda_n: float


def antenna_gain(spec: AntennaSpec, f: float) -> float:
    """eta_A (D pi f / c)^2, linear."""
    if not f > 0:
        raise ValueError("frequency must be positive")
    return spec.aperture_efficiency * (spec.diameter * math.pi * f / SPEED_OF_LIGHT) ** 2


def friis_received_power(p_t, g_t, g_r, f, d, l_t=1.0, l_r=1.0):
    """P_t G_t G_r c^2 / ((4 pi f d)^2 L_t L_r), losses linear."""
    if min(g_t, g_r, f, d) <= 0 or min(l_t, l_r) < 1 or p_t < 0:
        raise ValueError("invalid link parameters")
    return p_t * g_t * g_r * SPEED_OF_LIGHT**2 / ((4 * math.pi * f * d) ** 2 * l_t * l_r)


def moon_solid_angle(geom: Geometry) -> float:
    """Spherical cap 2 pi (1 - sqrt(d_M^2 - R_M^2)/d_M)."""
    d, r = geom.moon_distance, geom.moon_radius
    return 2.0 * math.pi * (1.0 - math.sqrt(d * d - r * r) / d)


def antenna_solid_angle(spec: AntennaSpec, f: float) -> float:
    """theta^2 with theta = 70 deg * wavelength / D (symmetric beam)."""
    if not f > 0:
        raise ValueError("frequency must be positive")
    theta = math.radians(HPBW_DEG_PER_WAVELENGTH) * (SPEED_OF_LIGHT / f) / spec.diameter
    return theta * theta


def external_antenna_temp(t_b: float, omega_m: float, omega_a: float) -> float:
    """min(1, Omega_M/Omega_A) T_B / 2."""
    if min(t_b, omega_m) < 0 or not omega_a > 0:
        raise ValueError("inputs must be non-negative and omega_a positive")
    return min(1.0, omega_m / omega_a) * t_b / 2.0


def operational_temp(spec: AntennaSpec, chain: RfChain, delta_t_ext: float) -> float:
    eta_rad, eta_tl = spec.rad_efficiency, chain.line_efficiency
    t_a = delta_t_ext + spec.physical_temp * (1.0 / eta_rad - 1.0)
    t_tl = chain.line_temp * (1.0 / eta_tl - 1.0)
    return chain.cmb_temp + t_a + t_tl / eta_rad + chain.receiver_temp / (eta_rad * eta_tl)


def noise_budget(t_op: float, bandwidth: float, alpha: float,
                 normalization: str = "complex") -> NoiseBudget:
    """Noise power k T_op B mapped to the per-quadrature scale sigma and lambda_n.

    ``complex``: sigma^2 = N0 B / 2. ``passband``: sigma^2 = N0 B / 4, paired with the
    doubled received amplitude of ``amplitude_constraint``; at alpha = 2 this gives
    gamma = 2 pi P_r / (N0 B).
    """
    if not (t_op > 0 and bandwidth > 0):
        raise ValueError("t_op and bandwidth must be positive")
    if normalization not in NORMALIZATIONS:
        raise ValueError(f"normalization must be one of {NORMALIZATIONS}")
    n0 = BOLTZMANN * t_op
    power = n0 * bandwidth
    sigma = math.sqrt(power / (2.0 if normalization == "complex" else 4.0))
    return NoiseBudget(t_op=t_op, n0=n0, noise_power=power, sigma=sigma,
                       lambda_n=2.0 ** (1.0 / alpha - 0.5) * sigma)


def amplitude_constraint(p_r: float, normalization: str = "complex") -> float:
    """sqrt(P_r) (``complex``) or sqrt(2 P_r) (``passband``)."""
    if p_r < 0:
        raise ValueError("received power must be non-negative")
    if normalization not in NORMALIZATIONS:
        raise ValueError(f"normalization must be one of {NORMALIZATIONS}")
    return math.sqrt(p_r if normalization == "complex" else 2.0 * p_r)


@dataclass(frozen=True)
class Band:
    name: str
    frequency: float
    bandwidth: float
    g_t_table_db: float
    g_r_table_db: float


BANDS = {
    "S": Band("S", 2245e6, 1e6, g_t_table_db=11.85, g_r_table_db=33.53),
    "Ka": Band("Ka", 27250e6, 10e6, g_t_table_db=28.27, g_r_table_db=49.95),
}
TX_ANTENNA = AntennaSpec(diameter=0.254, aperture_efficiency=0.43)
RX_ANTENNA = AntennaSpec(diameter=1.5, aperture_efficiency=0.54)
DEFAULT_CHAIN = RfChain()


def link_gains(band: Band, mode: str = "table",
               tx: AntennaSpec = TX_ANTENNA, rx: AntennaSpec = RX_ANTENNA) -> tuple:
    """(G_t, G_r) linear, from the preset table or the aperture formula."""
    if mode == "table":
        return from_db(band.g_t_table_db), from_db(band.g_r_table_db)
    if mode == "computed":
        return antenna_gain(tx, band.frequency), antenna_gain(rx, band.frequency)
    raise ValueError("gains mode must be 'table' or 'computed'")


@dataclass(frozen=True)
class LinkReport:
    band: str
    distance: float
    p_t: float
    t_b: float
    g_t_db: float
    g_r_db: float
    p_r: float
    omega_m: float
    omega_a: float
    delta_t_ext: float
    budget: NoiseBudget
    p_c: float

    @property
    def p_r_dbw(self) -> float:
        return db(self.p_r) if self.p_r > 0 else -math.inf


def evaluate_link(band: Band, distance: float, p_t: float, t_b: float, alpha: float,
                  gains: str = "table", normalization: str = "complex",
                  chain: RfChain = DEFAULT_CHAIN, rx: AntennaSpec = RX_ANTENNA,
                  tx: AntennaSpec = TX_ANTENNA) -> LinkReport:
    """Received power, noise budget and amplitude constraint for one operating point."""
    g_t, g_r = link_gains(band, gains, tx, rx)
    p_r = friis_received_power(p_t, g_t, g_r, band.frequency, distance,
                               from_db(chain.loss_tx_db), from_db(chain.loss_rx_db))
    om_m = moon_solid_angle(Geometry(distance))
    om_a = antenna_solid_angle(rx, band.frequency)
    dt = external_antenna_temp(t_b, om_m, om_a)
    budget = noise_budget(operational_temp(rx, chain, dt), band.bandwidth, alpha, normalization)
    return LinkReport(band=band.name, distance=distance, p_t=p_t, t_b=t_b, g_t_db=db(g_t),
                      g_r_db=db(g_r), p_r=p_r, omega_m=om_m, omega_a=om_a, delta_t_ext=dt,
                      budget=budget, p_c=amplitude_constraint(p_r, normalization))
