"""Per-face non-degeneracy summary of a two-variable polynomial file.

    python scripts/face_report.py fixtures/ex45.poly [--budget 4000] [--seed 0]
"""

import argparse

from mixedwh.analysis import ProbeSettings, nondegeneracy_report, true_nondegeneracy_check
from mixedwh.mixedpoly import is_convenient, load


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("file")
    ap.add_argument("--budget", type=int, default=4000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    f = load(args.file)
    settings = ProbeSettings(budget=args.budget, seed=args.seed)
    faces = nondegeneracy_report(f, settings)
    print(f"f = {f}")
    print(f"convenient: {bool(is_convenient(f))}\n")
    for fr in faces:
        z, nd, sd = fr.zeros, fr.newton_nondegenerate, fr.strongly_nondegenerate
        print(f"dim {fr.face.dim}  weight {fr.face.normal}  d = {fr.face.value}")
        print(f"  f_face = {fr.face_function}")
        print(f"  ladder: {fr.classification['ladder']}")
        empty = {True: "empty", False: "nonempty", None: "?"}[z.empty]
        print(f"  torus zeros: {empty} ({z.level}, {z.source})")
        print(f"  Newton non-degenerate: {nd.value} ({nd.level}, {nd.source})")
        print(f"  strongly non-degenerate: {sd.value} ({sd.level}); surjectivity {fr.surjectivity}")
        for step in fr.chain:
            print(f"    - {step}")
    verdict = true_nondegeneracy_check(f, settings, faces)
    print(f"\ntrue non-degenerate: {verdict.value} ({verdict.level})")
    for ff in verdict.failing:
        print(f"  failing face {ff.report.face.normal}: {ff.reason} [{ff.level}, {ff.source}]")


if __name__ == "__main__":
    main()
