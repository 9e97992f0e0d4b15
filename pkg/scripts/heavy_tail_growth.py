"""Growth of the capped upper excess constant for a power-law right tail.

With a Lomax(gamma) right tail the unrestricted d+ is infinite; restricted
to x < d it grows like log(d)/alpha.  Prints d+(d), d+(d)/log d and the
slope in log d, which should settle near 1/alpha.
"""

import argparse
import csv
import math
import sys

from rwbounds import presets
from rwbounds.adjustment import adjustment_coefficient
from rwbounds.distributions import validate
from rwbounds.excess import d_plus


def main():
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("--weight", type=float)
    ap.add_argument("--left-rate", type=float)
    ap.add_argument("--scale", type=float)
    ap.add_argument("--gamma", type=float)
    args = ap.parse_args()

    base = presets.load("lomax_gamma3").spec().to_dict()
    for key in ("weight", "left_rate", "scale", "gamma"):
        if getattr(args, key) is not None:
            base["params"][key] = getattr(args, key)
    dist = validate(base)
    alpha = adjustment_coefficient(dist).alpha

    out = csv.writer(sys.stdout, lineterminator="\n")
    out.writerow(["cap", "d_plus", "d_plus_over_log", "slope", "one_over_alpha"])
    prev = None
    for k in range(1, 8):
        cap = 10.0**k
        v = d_plus(dist, alpha, cap=cap).value
        slope = "" if prev is None else f"{(v - prev) / math.log(10):.6f}"
        out.writerow([f"{cap:g}", f"{v:.6f}", f"{v / math.log(cap):.6f}", slope,
                      f"{1 / alpha:.6f}"])
        prev = v


if __name__ == "__main__":
    main()
