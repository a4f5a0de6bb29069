"""How close a polynomial gets to zero on the torus as the radius window widens.

Prints the smallest relative value |f|/sum|term| found by the zero probe for
radius windows [10^-k, 10^k].  For a polynomial with no torus zero this
margin stays positive but may shrink as the window grows.

    python scripts/probe_margin.py fixtures/ex43.poly --kmax 4
"""

import argparse

from mixedwh.analysis import zero_probe
from mixedwh.mixedpoly import load


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("file")
    ap.add_argument("--kmax", type=int, default=4)
    ap.add_argument("--budget", type=int, default=20000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    f = load(args.file)
    print(" k   radii          outcome        min |f|/scale")
    for k in range(1, args.kmax + 1):
        pr = zero_probe(f, radii=(10.0**-k, 10.0**k), budget=args.budget, seed=args.seed)
        print(f"{k:2d}   [1e-{k}, 1e{k}]   {pr.outcome:14} {pr.min_seen:.3e}")


if __name__ == "__main__":
    main()
