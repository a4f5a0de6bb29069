"""Command-line front end.  Every command prints one JSON document.

Exit codes: 0 success, 1 negative verdict under ``--strict``, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import __version__
from .analysis import (
    ProbeSettings,
    critical_probe,
    euler_polar,
    euler_radial,
    nondegeneracy_report,
    reach_target,
    true_nondegeneracy_check,
    zero_probe,
)
from .errors import DimensionError, FamilyError, MixedPolyError
from .family import (
    REFERENCE_DIFF,
    REFERENCE_FRAME,
    FamilyParams,
    build_g,
    case_of,
    certify_empty,
    enumerate_general,
    validate,
)
from .gaussian import GaussianRational
from .homogeneity import classify, face_type, is_polar_wh, is_radially_wh
from .mixedpoly import MixedPolynomial, evaluate, is_convenient, load, parse
from .polyhedron import face_function, face_of, face_report, polyhedron_report

SCHEMA_VERSION = 1
SEED_ENV = "MIXEDWH_SEED"


class InputError(Exception):
    pass


# ---------------------------------------------------------------------------
# argument helpers

def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _radii(text: str) -> tuple[float, float]:
    try:
        lo, hi = (float(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected lo,hi, got {text!r}") from None
    return lo, hi


def _number(text: str):
    """Exact Gaussian rational when possible ("1/2-3i"), else a float complex."""
    text = text.strip()
    try:
        return GaussianRational.coerce(text)
    except (ValueError, ZeroDivisionError):
        pass
    try:
        return complex(text.replace(" ", "").replace("i", "j"))
    except ValueError:
        raise InputError(f"cannot read number {text!r}") from None


def _point(text: str) -> tuple:
    return tuple(_number(x) for x in text.split(","))


def _default_seed() -> int:
    raw = os.environ.get(SEED_ENV)
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"{SEED_ENV} must be an integer, got {raw!r}") from None


def _read_poly(path: str) -> MixedPolynomial:
    if path == "-":
        return parse(sys.stdin.read())
    try:
        return load(path)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _need_2d(f: MixedPolynomial, cmd: str):
    if f.nvars != 2:
        raise DimensionError(f"{cmd} needs a polynomial in 2 variables, got {f.nvars}")


def _num(x) -> list[float] | str:
    if isinstance(x, GaussianRational):
        return str(x)
    c = complex(x)
    return [c.real, c.imag]


def _axis_terms(conv) -> dict:
    return {f"z{i + 1}": None if t is None else str(t) for i, t in enumerate(conv.witnesses)}


def _settings(args) -> ProbeSettings:
    return ProbeSettings(radii=args.radii, budget=args.budget, seed=args.seed, tol=args.tol)


# ---------------------------------------------------------------------------
# commands; each returns (report, verdict) with verdict False meaning negative

def cmd_analyze(args):
    f = _read_poly(args.file)
    _need_2d(f, "analyze")
    settings = _settings(args)
    conv = is_convenient(f)
    faces = nondegeneracy_report(f, settings)
    tnd = true_nondegeneracy_check(f, settings, faces)
    ft = face_type(f)
    report = {
        "input": str(f),
        "nvars": f.nvars,
        "probe_settings": {"seed": settings.seed, "budget": settings.budget, "radii": list(settings.radii), "tol": settings.tol},
        "convenient": {"value": bool(conv), "axis_terms": _axis_terms(conv)},
        "homogeneity": classify(f).to_dict(),
        "polyhedron": polyhedron_report(f),
        "face_type": {
            "mixed_wh": ft.mixed_wh_face_type,
            "strongly_polar_positive": ft.strongly_polar_positive_face_type,
        },
        "faces": [fr.to_dict() for fr in faces],
        "true_nondegenerate": tnd.to_dict(),
    }
    return report, tnd.value


def cmd_faces(args):
    f = _read_poly(args.file)
    _need_2d(f, "faces")
    return polyhedron_report(f), None


def cmd_face(args):
    f = _read_poly(args.file)
    if args.p is None:
        raise InputError("face needs --p")
    face = face_of(f, args.p)
    rep = face_report(f, face)
    rep["classification"] = classify(face_function(f, face)).to_dict()
    return rep, None


def cmd_homog(args):
    f = _read_poly(args.file)
    rep = classify(f)
    out = rep.to_dict()
    if f.nvars == 2:
        out["face_type"] = face_type(f).to_dict()
    return out, rep.ladder != "none"


def cmd_euler(args):
    f = _read_poly(args.file)
    if args.point is None or args.d is None:
        raise InputError("euler needs --point and --d")
    z = _point(args.point)
    if args.polar:
        W = args.q if args.q is not None else args.p
        if W is None:
            raise InputError("euler --polar needs --q")
        chk = euler_polar(f, W, args.d, z)
    else:
        if args.p is None:
            raise InputError("euler --radial needs --p")
        chk = euler_radial(f, args.p, args.d, z)
    return chk.to_dict(), chk.holds


def cmd_probe(args, kind):
    f = _read_poly(args.file)
    if kind == "zero":
        res = zero_probe(f, args.radii, args.budget, args.seed, args.tol)
    else:
        res = critical_probe(f, args.radii, args.budget, args.seed, args.tol, zeros_only=args.zeros_only)
    return res.to_dict(), not res.found


def cmd_reach(args):
    f = _read_poly(args.file)
    if args.p is None or args.q is None or args.point is None or args.target is None:
        raise InputError("reach needs --p, --q, --point and --target")
    d_r, d_p = is_radially_wh(f, args.p), is_polar_wh(f, args.q)
    if d_r is None or d_p is None:
        raise InputError("f is not mixed weighted homogeneous for the given --p/--q")
    w = complex(_number(args.target))
    z = reach_target(f, args.p, d_r, args.q, d_p, _point(args.point), w)
    value = complex(evaluate(f, z))
    err = abs(value - w) / abs(w)
    return {
        "d_r": d_r,
        "d_p": d_p,
        "point": [_num(x) for x in z],
        "value": _num(value),
        "target": _num(w),
        "relative_error": err,
    }, err <= 1e-9


def _read_params(path: str) -> FamilyParams:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"bad JSON in {path}: {exc}") from None
    if not isinstance(data, dict):
        raise InputError("family parameters must be a JSON object")
    return FamilyParams.from_dict(data)


def cmd_family(args):
    action = args.action
    if action == "enumerate":
        if args.frame is None:
            alpha, beta, gamma, delta = (REFERENCE_FRAME[k] for k in ("alpha", "beta", "gamma", "delta"))
            P, Q, diff = REFERENCE_FRAME["P"], REFERENCE_FRAME["Q"], REFERENCE_DIFF
        else:
            if len(args.frame) != 4:
                raise InputError("--frame needs alpha,beta,gamma,delta")
            alpha, beta, gamma, delta = args.frame
            if args.p is None or args.q is None or args.diff is None:
                raise InputError("--frame needs --p, --q and --diff")
            P, Q, diff = args.p, args.q, args.diff
        found = enumerate_general(alpha, beta, gamma, delta, P, Q, diff, positive_polar=not args.nonzero_polar)
        rows = []
        for p in found:
            row = {"params": p.to_dict(), "tuple": list(p.exponents), "sign": validate(p).sign}
            if (alpha, beta, gamma, delta, tuple(P), tuple(Q), tuple(diff)) == (3, 8, 8, 7, (1, 5), (1, 1), (-1, 1)):
                row["case"] = case_of(p.exponents)
            rows.append(row)
        return {"frame": [alpha, beta, gamma, delta], "P": list(P), "Q": list(Q), "diff": list(diff),
                "count": len(rows), "instances": rows}, None
    if args.params is None:
        raise InputError(f"family {action} needs a parameter file")
    params = _read_params(args.params)
    if action == "validate":
        rep = validate(params)
        return rep.to_dict(), rep.passed
    if action == "build":
        g = build_g(params)
        return {"polynomial": str(g), "terms": len(g.terms)}, None
    try:
        cert = certify_empty(params, probe=True, radii=args.radii, budget=args.budget, seed=args.seed)
    except FamilyError as exc:
        return {"certified": False, "reason": str(exc), "violations": exc.violations}, False
    out = cert.to_dict()
    out["certified"] = True
    return out, True


def cmd_convenient(args):
    f = _read_poly(args.file)
    conv = is_convenient(f)
    return {"convenient": bool(conv), "axis_terms": _axis_terms(conv)}, bool(conv)


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None, help=f"probe seed (default ${SEED_ENV} or 0)")
    common.add_argument("--budget", type=int, default=4000, help="probe sample count")
    common.add_argument("--radii", type=_radii, default=(0.1, 10.0), help="probe radius interval lo,hi")
    common.add_argument("--tol", type=float, default=1e-9, help="relative probe threshold")
    common.add_argument("--strict", action="store_true", help="exit 1 on a negative verdict")
    common.add_argument("--p", type=_ints, default=None, help="radial weight, e.g. 1,5")
    common.add_argument("--q", type=_ints, default=None, help="polar weight, e.g. 1,-1")

    parser = argparse.ArgumentParser(prog="mixedwh", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def poly_cmd(name, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.add_argument("file", help="polynomial file, or - for stdin")
        return sp

    poly_cmd("analyze", "full report: polyhedron, homogeneity, faces, non-degeneracy")
    poly_cmd("faces", "support, staircase and compact faces (2 variables)")
    poly_cmd("face", "one face Delta(P) selected by --p")
    poly_cmd("homog", "homogeneity ladder and weights")
    sp = poly_cmd("euler", "Euler identity at a point")
    mode = sp.add_mutually_exclusive_group()
    mode.add_argument("--radial", action="store_true")
    mode.add_argument("--polar", action="store_true")
    sp.add_argument("--d", type=int, default=None, help="degree")
    sp.add_argument("--point", default=None, help="comma-separated coordinates, e.g. 1,1/2-i")
    poly_cmd("probe-zeros", "seeded search for torus zeros")
    sp = poly_cmd("probe-critical", "seeded search for mixed critical points")
    sp.add_argument("--zeros-only", action="store_true", help="only critical points on f = 0")
    sp = poly_cmd("reach", "point with f(z) = target along the torus orbits of a witness")
    sp.add_argument("--point", default=None)
    sp.add_argument("--target", default=None)
    poly_cmd("convenient", "axis-term test")

    sp = sub.add_parser("family", parents=[common], help="the four-term family")
    sp.add_argument("action", choices=["validate", "build", "certify", "enumerate"])
    sp.add_argument("params", nargs="?", default=None, help="JSON parameter file, or - for stdin")
    sp.add_argument("--frame", type=_ints, default=None, help="alpha,beta,gamma,delta")
    sp.add_argument("--diff", type=_ints, default=None, help="(a - a1, b - b1)")
    sp.add_argument("--nonzero-polar", action="store_true", help="keep negative polar degrees too")
    return parser


COMMANDS = {
    "analyze": cmd_analyze,
    "faces": cmd_faces,
    "face": cmd_face,
    "homog": cmd_homog,
    "euler": cmd_euler,
    "probe-zeros": lambda a: cmd_probe(a, "zero"),
    "probe-critical": lambda a: cmd_probe(a, "critical"),
    "reach": cmd_reach,
    "family": cmd_family,
    "convenient": cmd_convenient,
}


def _emit(obj, stream):
    stream.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.seed is None:
            args.seed = _default_seed()
        report, verdict = COMMANDS[args.command](args)
    except (InputError, MixedPolyError, ValueError) as exc:
        _emit({"schema_version": SCHEMA_VERSION, "command": args.command, "error": str(exc)}, sys.stderr)
        return 2
    report = {"schema_version": SCHEMA_VERSION, "command": args.command, **report}
    _emit(report, sys.stdout)
    if args.strict and verdict is False:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
