"""Enumerate the four-term family on the 3,8,8,7 frame and certify each instance.

    python scripts/enumerate_family.py [--budget 100000]
"""

import argparse
import time

from mixedwh.family import case_of, certify_empty, enumerate_4_2, params_4_2


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--budget", type=int, default=20000, help="zero-probe samples per instance")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    t0 = time.perf_counter()
    found = enumerate_4_2()
    print(f"{'(a, b, a1, b1, c, d, c1, d1)':34} case sign d_r d_p  min |g|/scale")
    for t in found:
        cert = certify_empty(params_4_2(t), budget=args.budget, seed=args.seed)
        pr = cert.corroboration
        print(f"{str(t):34} {case_of(t):>4} {cert.sign:>4} {cert.d_r:>3} {cert.d_p:>3}  {pr.min_seen:.3e} ({pr.outcome})")
    cases = [case_of(t) for t in found]
    print(f"\n{len(found)} instances: {cases.count('I')} case I, {cases.count('II')} case II "
          f"({time.perf_counter() - t0:.1f} s)")


if __name__ == "__main__":
    main()
