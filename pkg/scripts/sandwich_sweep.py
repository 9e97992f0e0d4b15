"""Exact E[M_d] of the +-1 walk against its lower/upper bounds over a (p, d) grid.

The ratio upper/lower tends to e^{2 alpha} as d grows; the last column shows
how close each row is to that limit.
"""

import argparse
import csv
import math
import sys

from rwbounds.bounds import dichotomous_expected_max, expected_max_bounds


def main():
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("--p", type=float, nargs="+", default=[0.55, 0.6, 0.7, 0.8, 0.9])
    ap.add_argument("--d-max", type=int, default=12)
    args = ap.parse_args()

    out = csv.writer(sys.stdout, lineterminator="\n")
    out.writerow(["p", "d", "lower", "exact", "upper", "exact_over_lower",
                  "ratio_over_limit"])
    for p in args.p:
        alpha = math.log(p / (1 - p))
        for d in range(1, args.d_max + 1):
            lo, up = expected_max_bounds(alpha, d, 2.0)
            exact = dichotomous_expected_max(p, d)
            out.writerow([p, d, f"{lo:.8g}", f"{exact:.8g}", f"{up:.8g}",
                          f"{exact / lo:.6f}", f"{up / lo / math.exp(2 * alpha):.6f}"])


if __name__ == "__main__":
    main()
