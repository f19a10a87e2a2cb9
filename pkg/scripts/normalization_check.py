"""Compare noise normalizations and gain sources at a single operating point.

For each (gains, normalization) pair the Ka-band capacity bound at d = 1e7 m,
P_t = 1 W, T_B = 0 K, m = 15, alpha = 2 is printed together with the link terms
that drive it.
"""

import argparse
import itertools

from lunarlink.capacity_bounds import ergodic_capacity_lb_quadrature
from lunarlink.link_budget import BANDS, NORMALIZATIONS, db, evaluate_link
from lunarlink.snr_model import SnrDistribution


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--band", choices=sorted(BANDS), default="Ka")
    ap.add_argument("--distance", type=float, default=1e7)
    ap.add_argument("--p-t", type=float, default=1.0)
    ap.add_argument("--t-b", type=float, default=0.0)
    ap.add_argument("--alpha", type=float, default=2.0)
    ap.add_argument("--m", type=float, default=15.0)
    args = ap.parse_args()

    band = BANDS[args.band]
    print(f"{'gains':>9} {'normalization':>14} {'G_t dBi':>8} {'G_r dBi':>8} "
          f"{'P_r dBW':>9} {'gbar dB':>8} {'C Mbps':>8}")
    for gains, norm in itertools.product(("table", "computed"), NORMALIZATIONS):
        r = evaluate_link(band, args.distance, args.p_t, args.t_b, args.alpha, gains, norm)
        dist = SnrDistribution.from_physical(r.p_c, r.budget.lambda_n, args.alpha, args.m)
        cap = band.bandwidth * ergodic_capacity_lb_quadrature(dist) / 1e6
        print(f"{gains:>9} {norm:>14} {r.g_t_db:8.2f} {r.g_r_db:8.2f} {r.p_r_dbw:9.2f} "
              f"{db(dist.gamma_bar):8.2f} {cap:8.2f}")


if __name__ == "__main__":
    main()
