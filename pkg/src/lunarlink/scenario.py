"""Sweeps of the lunar link over brightness temperature, alpha, m, distance and power."""

from __future__ import annotations

import csv
import itertools
import warnings
from dataclasses import astuple, dataclass, field, fields
from pathlib import Path

import numpy as np

from .capacity_bounds import ergodic_capacity_lb_quadrature, outage_ub
from .link_budget import BANDS, NORMALIZATIONS, evaluate_link, from_db
from .snr_model import SnrDistribution

CSV_HEADER = ("band,f_hz,bw_hz,t_b_k,alpha,m,d_m,p_t_w,t_op_k,p_r_dbw,lambda_n,"
              "gamma_bar,capacity_bps,outage_ub")

# outage thresholds (dB) per (band, distance, transmit power) panel
DEFAULT_GAMMA_TH_DB = {
    ("Ka", 1e7, 1.0): 15.0, ("Ka", 7e7, 1.0): 5.0,
    ("Ka", 1e7, 10.0): 30.0, ("Ka", 7e7, 10.0): 10.0,
    ("S", 1e7, 1.0): 10.0, ("S", 7e7, 1.0): -5.0,
    ("S", 1e7, 10.0): 15.0, ("S", 7e7, 10.0): -5.0,
}


def _default_t_b():
    return tuple(float(t) for t in range(0, 601, 25))


@dataclass(frozen=True)
class ScenarioConfig:
    bands: tuple = ("Ka", "S")
    t_b_grid: tuple = field(default_factory=_default_t_b)
    alpha_set: tuple = (1.8, 1.9, 2.0)
    m_set: tuple = (1.0, 5.0, 15.0)
    distances: tuple = (1e7, 7e7)
    p_t_set: tuple = (1.0, 10.0)
    gamma_th_db: float | None = None
    gains_mode: str = "table"
    normalization: str = "complex"

    def __post_init__(self):
        for name in ("bands", "t_b_grid", "alpha_set", "m_set", "distances", "p_t_set"):
            if len(getattr(self, name)) == 0:
                raise ValueError(f"{name} must be non-empty")
        unknown = set(self.bands) - set(BANDS)
        if unknown:
            raise ValueError(f"unknown band(s): {sorted(unknown)}")
        if self.gains_mode not in ("table", "computed"):
            raise ValueError("gains_mode must be 'table' or 'computed'")
        if self.normalization not in NORMALIZATIONS:
            raise ValueError(f"normalization must be one of {NORMALIZATIONS}")

    def threshold_db(self, band: str, d: float, p_t: float) -> float:
        if self.gamma_th_db is not None:
            return self.gamma_th_db
        return DEFAULT_GAMMA_TH_DB.get((band, float(d), float(p_t)), 10.0)


@dataclass(frozen=True)
class SweepRow:
    band: str
    f: float
    B: float
    t_b: float
    alpha: float
    m: float
    d: float
    p_t: float
    t_op: float
    p_r_dbw: float
    lambda_n: float
    gamma_bar: float
    ergodic_capacity_bps: float
    outage_ub: float


def run_sweep(cfg: ScenarioConfig, failures: list | None = None) -> list:
    """Evaluate every grid point; rows are ordered band, d, p_t, alpha, m, t_b.

    A point whose bound evaluation raises is skipped and recorded in ``failures``
    as (key, message) when a list is supplied.
    """
    rows = []
    grid = itertools.product(cfg.bands, cfg.distances, cfg.p_t_set, cfg.alpha_set,
                             cfg.m_set, cfg.t_b_grid)
    for band_name, d, p_t, alpha, m, t_b in grid:
        band = BANDS[band_name]
        try:
            link = evaluate_link(band, d, p_t, t_b, alpha, cfg.gains_mode, cfg.normalization)
            dist = SnrDistribution.from_physical(link.p_c, link.budget.lambda_n, alpha, m)
            cap = ergodic_capacity_lb_quadrature(dist)
            out = outage_ub(dist, from_db(cfg.threshold_db(band_name, d, p_t)))
        except (ValueError, RuntimeError) as exc:
            if failures is not None:
                failures.append(((band_name, d, p_t, alpha, m, t_b), str(exc)))
            continue
        rows.append(SweepRow(band=band_name, f=band.frequency, B=band.bandwidth, t_b=t_b,
                             alpha=alpha, m=m, d=d, p_t=p_t, t_op=link.budget.t_op,
                             p_r_dbw=link.p_r_dbw, lambda_n=link.budget.lambda_n,
                             gamma_bar=dist.gamma_bar,
                             ergodic_capacity_bps=band.bandwidth * cap, outage_ub=out))
    return rows


def _fmt(v) -> str:
    return v if isinstance(v, str) else format(float(v), ".16e")


def emit_csv(rows, path, metadata: dict | None = None) -> Path:
    """Write rows under ``CSV_HEADER``; optional ``# key=value`` lines precede the header."""
    path = Path(path)
    with path.open("w", newline="", encoding="utf-8") as fh:
        for k, v in (metadata or {}).items():
            fh.write(f"# {k}={v}\n")
        fh.write(CSV_HEADER + "\n")
        writer = csv.writer(fh, lineterminator="\n")
        for r in rows:
            writer.writerow([_fmt(v) for v in astuple(r)])
    return path


def parse_csv(path) -> list:
    names = [f.name for f in fields(SweepRow)]
    with Path(path).open(encoding="utf-8") as fh:
        lines = [ln for ln in fh if not ln.startswith("#")]
    reader = csv.reader(lines)
    if ",".join(next(reader)) != CSV_HEADER:
        raise ValueError("unexpected CSV header")
    return [SweepRow(**{n: (v if n == "band" else float(v)) for n, v in zip(names, rec)})
            for rec in reader]


def read_csv_metadata(path) -> dict:
    meta = {}
    with Path(path).open(encoding="utf-8") as fh:
        for ln in fh:
            if not ln.startswith("#"):
                break
            key, _, value = ln[1:].strip().partition("=")
            meta[key] = value
    return meta


def panels(rows) -> dict:
    """Rows grouped by (band, d, p_t) in first-seen order."""
    out = {}
    for r in rows:
        out.setdefault((r.band, r.d, r.p_t), []).append(r)
    return out


def _series(rows):
    out = {}
    for r in rows:
        out.setdefault((r.alpha, r.m), []).append(r)
    return {k: sorted(v, key=lambda r: r.t_b) for k, v in out.items()}


def emit_plots(rows, path_prefix) -> list:
    """One SVG per panel for capacity and one for the outage bound; returns written paths."""
    import matplotlib
    from matplotlib.figure import Figure

    matplotlib.rcParams["svg.hashsalt"] = "lunarlink"
    prefix = Path(path_prefix)
    written = []
    grouped = panels(rows)
    if not grouped:
        warnings.warn("no rows to plot", RuntimeWarning)
        return written
    for (band, d, p_t), panel_rows in grouped.items():
        series = _series(panel_rows)
        stem = f"{prefix.name}{band}_d{d:.0e}_pt{p_t:g}".replace("+", "")
        for kind in ("capacity", "outage"):
            fig = Figure(figsize=(6.4, 4.8))
            ax = fig.add_subplot()
            for (alpha, m), s in series.items():
                x = [r.t_b for r in s]
                if kind == "capacity":
                    ax.plot(x, [r.ergodic_capacity_bps / 1e6 for r in s],
                            label=f"alpha={alpha:g}, m={m:g}")
                else:
                    y = np.maximum([r.outage_ub for r in s], 1e-300)
                    ax.semilogy(x, y, label=f"alpha={alpha:g}, m={m:g}")
            ax.set_xlabel("brightness temperature T_B (K)")
            if kind == "capacity":
                ax.set_ylabel("ergodic capacity bound (Mbps)")
            else:
                ax.set_ylabel("outage probability bound")
                positive = [r.outage_ub for r in panel_rows if r.outage_ub > 0]
                ax.set_ylim(bottom=min([1e-8] + positive) / 10, top=1.5)
            ax.set_title(f"{band} band, d = {d:.3g} m, P_t = {p_t:g} W")
            ax.grid(True, which="both", alpha=0.3)
            ax.legend(fontsize="small", ncol=3)
            target = prefix.parent / f"{stem}_{kind}.svg"
            fig.savefig(target, format="svg", metadata={"Date": None})
            written.append(target)
    return written


def slice_rows(rows, **match):
    """Rows whose attributes equal every keyword in ``match`` (floats compared exactly)."""
    return [r for r in rows if all(getattr(r, k) == v for k, v in match.items())]


def capacity_at(rows, **match) -> float:
    hit = slice_rows(rows, **match)
    if len(hit) != 1:
        raise KeyError(f"{len(hit)} rows match {match}")
    return hit[0].ergodic_capacity_bps


def is_strictly_monotone(values, decreasing: bool) -> bool:
    diffs = np.diff(np.asarray(values, dtype=float))
    return bool(np.all(diffs < 0) if decreasing else np.all(diffs > 0))


def tb_slices(rows):
    """T_B-ordered sequences per (band, d, p_t, alpha, m)."""
    out = {}
    for r in rows:
        out.setdefault((r.band, r.d, r.p_t, r.alpha, r.m), []).append(r)
    return {k: sorted(v, key=lambda r: r.t_b) for k, v in out.items()}

