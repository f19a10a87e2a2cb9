"""Full lunar-link sweep under one or more gain/normalization conventions.

Each convention gets its own sub-directory with sweep.csv and the per-panel SVG
figures, followed by a short summary of the headline numbers.
"""

import argparse
from pathlib import Path

from lunarlink.scenario import (ScenarioConfig, capacity_at, emit_csv, emit_plots,
                                run_sweep, slice_rows)

CONVENTIONS = {"table-complex": ("table", "complex"),
               "computed-passband": ("computed", "passband")}


def summarize(rows):
    anchor = capacity_at(rows, band="Ka", d=1e7, p_t=1.0, alpha=2.0, m=15.0, t_b=0.0)
    print(f"  Ka d=1e7 P_t=1 m=15 alpha=2 T_B=0: {anchor / 1e6:.2f} Mbps")
    for band, unit, scale in (("Ka", "Mbps", 1e6), ("S", "kbps", 1e3)):
        far = [r.ergodic_capacity_bps for r in slice_rows(rows, band=band, d=7e7, p_t=1.0)]
        if far:
            print(f"  {band} d=7e7 P_t=1 range: [{min(far) / scale:.2f}, {max(far) / scale:.2f}] {unit}")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=Path, default=Path("out/system_sweep"))
    ap.add_argument("--conventions", nargs="+", choices=sorted(CONVENTIONS),
                    default=sorted(CONVENTIONS))
    ap.add_argument("--no-plots", action="store_true")
    args = ap.parse_args()

    for name in args.conventions:
        gains, norm = CONVENTIONS[name]
        rows = run_sweep(ScenarioConfig(gains_mode=gains, normalization=norm))
        target = args.out / name
        target.mkdir(parents=True, exist_ok=True)
        emit_csv(rows, target / "sweep.csv", {"gains_mode": gains, "normalization": norm})
        if not args.no_plots:
            emit_plots(rows, target / "fig_")
        print(f"{name}: {len(rows)} rows -> {target}")
        summarize(rows)


if __name__ == "__main__":
    main()
