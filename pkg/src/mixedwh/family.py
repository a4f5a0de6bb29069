"""The four-term family g with empty torus zero set.

    g = z1^a  zb1^(alpha-a)  z2^b  zb2^(beta-b)
      - z1^a1 zb1^(alpha-a1) z2^b1 zb2^(beta-b1)
      + z1^c  zb1^(gamma-c)  z2^d  zb2^(delta-d)
      + z1^c1 zb1^(gamma-c1) z2^d1 zb2^(delta-d1)

with alpha < gamma, delta < beta.  Under the five conditions checked by
:func:`validate`, g is radially w.h. for P, polar w.h. of nonzero degree for
Q, Delta(P) is the segment between (alpha, beta) and (gamma, delta), and g
has no zero on C*^2.

Conditions, by name:

radial_balance        p1 (gamma - alpha) + p2 (delta - beta) = 0
polar_direction       (a - a1, b - b1) = (q2 k, -q1 k), k != 0
difference_match      (a - a1, b - b1) = (c - c1, d - d1)
sign_relation         (2(a-c) - alpha + gamma, 2(b-d) - beta + delta) = +-(a - a1, b - b1)
nonzero_polar_degree  q1 (2a - alpha) + q2 (2b - beta) != 0

The phase identity ((a+a1-alpha) - (c+c1-gamma), (b+b1-beta) - (d+d1-delta))
= +-(a - a1, b - b1) follows from the middle three and is checked exactly.
"""

from __future__ import annotations

import itertools
from dataclasses import asdict, dataclass, field
from math import gcd

from .analysis.probes import ProbeResult, zero_probe
from .errors import FamilyError
from .homogeneity import is_polar_wh, is_radially_wh
from .gaussian import ONE
from .lattice import primitive
from .mixedpoly import MixedPolynomial
from .polyhedron import edge_normal, face_function, face_of, support

EXPONENTS = ("a", "a1", "b", "b1", "c", "c1", "d", "d1")
FIELDS = ("alpha", "beta", "gamma", "delta") + EXPONENTS + ("P", "Q", "k")
CONDITIONS = (
    "radial_balance",
    "polar_direction",
    "difference_match",
    "sign_relation",
    "nonzero_polar_degree",
)


@dataclass(frozen=True)
class FamilyParams:
    alpha: int
    beta: int
    gamma: int
    delta: int
    a: int
    a1: int
    b: int
    b1: int
    c: int
    c1: int
    d: int
    d1: int
    P: tuple[int, int]
    Q: tuple[int, int]
    k: int

    def __post_init__(self):
        object.__setattr__(self, "P", tuple(int(x) for x in self.P))
        object.__setattr__(self, "Q", tuple(int(x) for x in self.Q))

    @property
    def exponents(self) -> tuple[int, ...]:
        """(a, b, a1, b1, c, d, c1, d1)"""
        return (self.a, self.b, self.a1, self.b1, self.c, self.d, self.c1, self.d1)

    @property
    def diff(self) -> tuple[int, int]:
        return (self.a - self.a1, self.b - self.b1)

    def to_dict(self) -> dict:
        out = asdict(self)
        out["P"], out["Q"] = list(self.P), list(self.Q)
        return out

    @classmethod
    def from_dict(cls, data: dict) -> FamilyParams:
        missing = [k for k in FIELDS if k not in data]
        if missing:
            raise FamilyError(f"missing family fields: {', '.join(missing)}", missing)
        extra = sorted(set(data) - set(FIELDS))
        if extra:
            raise FamilyError(f"unknown family fields: {', '.join(extra)}", extra)
        try:
            vals = {k: int(data[k]) for k in FIELDS if k not in ("P", "Q")}
            P, Q = tuple(int(x) for x in data["P"]), tuple(int(x) for x in data["Q"])
        except (TypeError, ValueError) as exc:
            raise FamilyError(f"family fields must be integers: {exc}") from exc
        if len(P) != 2 or len(Q) != 2:
            raise FamilyError("P and Q must have two entries")
        return cls(P=P, Q=Q, **vals)


def invariant_violations(p: FamilyParams) -> list[str]:
    """Type-level problems, one message per offending field."""
    out = []
    for name in ("alpha", "beta", "gamma", "delta") + EXPONENTS:
        if getattr(p, name) < 0:
            out.append(f"{name} = {getattr(p, name)} is negative")
    if not p.alpha < p.gamma:
        out.append(f"alpha < gamma fails ({p.alpha} >= {p.gamma})")
    if not p.delta < p.beta:
        out.append(f"delta < beta fails ({p.delta} >= {p.beta})")
    for names, top in ((("a", "a1"), "alpha"), (("b", "b1"), "beta"), (("c", "c1"), "gamma"), (("d", "d1"), "delta")):
        for name in names:
            if getattr(p, name) > getattr(p, top):
                out.append(f"{name} = {getattr(p, name)} exceeds {top} = {getattr(p, top)}")
    if len(p.P) != 2 or any(x <= 0 for x in p.P):
        out.append(f"P = {p.P} is not strictly positive")
    if len(p.Q) != 2 or not any(p.Q):
        out.append("Q must be a nonzero 2-vector")
    if p.k == 0:
        out.append("k must be nonzero")
    if (p.a, p.b) == (p.a1, p.b1):
        out.append("terms 1 and 2 coincide ((a, b) = (a1, b1))")
    if (p.c, p.d) == (p.c1, p.d1):
        out.append("terms 3 and 4 coincide ((c, d) = (c1, d1))")
    return out


@dataclass(frozen=True)
class ConditionCheck:
    name: str
    holds: bool
    witness: dict  # the exact integers compared

    def to_dict(self) -> dict:
        return {"name": self.name, "holds": self.holds, "witness": self.witness}


@dataclass(frozen=True)
class ConditionReport:
    params: FamilyParams
    violations: list[str]
    checks: list[ConditionCheck] = field(default_factory=list)
    sign: str | None = None  # "+" or "-" in sign_relation
    phase_identity: bool | None = None
    d_r: int | None = None
    d_p: int | None = None

    @property
    def passed(self) -> bool:
        return not self.violations and len(self.checks) == len(CONDITIONS) and all(c.holds for c in self.checks)

    @property
    def failed(self) -> list[str]:
        return [c.name for c in self.checks if not c.holds]

    def to_dict(self) -> dict:
        return {
            "params": self.params.to_dict(),
            "passed": self.passed,
            "invariant_violations": list(self.violations),
            "conditions": [c.to_dict() for c in self.checks],
            "sign": self.sign,
            "phase_identity": self.phase_identity,
            "d_r": self.d_r,
            "d_p": self.d_p,
        }


def validate(p: FamilyParams) -> ConditionReport:
    """Check every hypothesis exactly over the integers."""
    violations = invariant_violations(p)
    if violations:
        return ConditionReport(p, violations)
    (p1, p2), (q1, q2) = p.P, p.Q
    diff = p.diff
    diff2 = (p.c - p.c1, p.d - p.d1)
    lhs7 = (2 * (p.a - p.c) - p.alpha + p.gamma, 2 * (p.b - p.d) - p.beta + p.delta)
    balance = p1 * (p.gamma - p.alpha) + p2 * (p.delta - p.beta)
    direction = (q2 * p.k, -q1 * p.k)
    d_p = q1 * (2 * p.a - p.alpha) + q2 * (2 * p.b - p.beta)
    sign = "+" if lhs7 == diff else "-" if lhs7 == (-diff[0], -diff[1]) else None
    checks = [
        ConditionCheck("radial_balance", balance == 0, {"value": balance}),
        ConditionCheck("polar_direction", p.k != 0 and diff == direction,
                       {"diff": list(diff), "q2k_minus_q1k": list(direction), "k": p.k}),
        ConditionCheck("difference_match", diff == diff2, {"ab": list(diff), "cd": list(diff2)}),
        ConditionCheck("sign_relation", sign is not None, {"lhs": list(lhs7), "diff": list(diff), "sign": sign}),
        ConditionCheck("nonzero_polar_degree", d_p != 0, {"value": d_p}),
    ]
    phase = (
        (p.a + p.a1 - p.alpha) - (p.c + p.c1 - p.gamma),
        (p.b + p.b1 - p.beta) - (p.d + p.d1 - p.delta),
    )
    identity = None
    if checks[2].holds and sign is not None:
        s = 1 if sign == "+" else -1
        identity = phase == (s * diff[0], s * diff[1])
    d_r = p1 * p.alpha + p2 * p.beta if balance == 0 else None
    return ConditionReport(p, [], checks, sign, identity, d_r, d_p if d_p != 0 else None)


def _terms(p: FamilyParams):
    return [
        (1, (p.a, p.b), (p.alpha - p.a, p.beta - p.b)),
        (-1, (p.a1, p.b1), (p.alpha - p.a1, p.beta - p.b1)),
        (1, (p.c, p.d), (p.gamma - p.c, p.delta - p.d)),
        (1, (p.c1, p.d1), (p.gamma - p.c1, p.delta - p.d1)),
    ]


def build_g(p: FamilyParams) -> MixedPolynomial:
    """The four-term polynomial with sign pattern +, -, +, +."""
    violations = invariant_violations(p)
    if violations:
        raise FamilyError("invalid family parameters: " + "; ".join(violations), violations)
    return MixedPolynomial.from_terms(2, _terms(p))


@dataclass(frozen=True)
class EmptinessCertificate:
    report: ConditionReport
    polynomial: MixedPolynomial
    d_r: int
    d_p: int
    sign: str
    corroboration: ProbeResult | None

    def to_dict(self) -> dict:
        return {
            "statement": "g has no zero on C*^2",
            "polynomial": str(self.polynomial),
            "conditions": self.report.to_dict(),
            "d_r": self.d_r,
            "d_p": self.d_p,
            "sign": self.sign,
            "corroboration": None if self.corroboration is None else self.corroboration.to_dict(),
        }


def certify_empty(
    p: FamilyParams,
    probe: bool = True,
    radii=(1e-2, 1e2),
    budget: int = 4000,
    seed: int = 0,
) -> EmptinessCertificate:
    """Issue the emptiness certificate, re-deriving every consequence exactly.

    Raises FamilyError when a hypothesis fails or a consequence does not
    check out.  The optional zero probe is recorded as corroboration only.
    """
    rep = validate(p)
    if not rep.passed:
        detail = rep.violations or [f"condition {n} fails" for n in rep.failed]
        raise FamilyError("no certificate: " + "; ".join(detail), detail)
    if not rep.phase_identity:
        raise FamilyError("phase identity fails", ["phase_identity"])
    g = build_g(p)
    problems = []
    if is_radially_wh(g, p.P) != rep.d_r:
        problems.append(f"g is not radially w.h. of degree {rep.d_r} for P")
    if is_polar_wh(g, p.Q) != rep.d_p:
        problems.append(f"g is not polar w.h. of degree {rep.d_p} for Q")
    face = face_of(g, p.P)
    if face.dim != 1 or face_function(g, face) != g:
        problems.append("Delta(P) is not the whole one-dimensional support of g")
    if problems:
        raise FamilyError("; ".join(problems), problems)
    corro = zero_probe(g, radii=radii, budget=budget, seed=seed) if probe else None
    return EmptinessCertificate(rep, g, rep.d_r, rep.d_p, rep.sign, corro)


# ---------------------------------------------------------------------------
# enumeration

def solve_k(Q, diff) -> int | None:
    """The nonzero k with diff = (q2 k, -q1 k), or None."""
    q1, q2 = Q
    cands = set()
    for q, x in ((q2, diff[0]), (-q1, diff[1])):
        if q == 0:
            if x != 0:
                return None
            continue
        if x % q:
            return None
        cands.add(x // q)
    if len(cands) != 1:
        return None
    k = cands.pop()
    return k if k != 0 else None


def _frame_check(alpha, beta, gamma, delta, P, Q):
    problems = []
    if min(alpha, beta, gamma, delta) < 0:
        problems.append("frame entries must be nonnegative")
    if not alpha < gamma:
        problems.append("alpha < gamma fails")
    if not delta < beta:
        problems.append("delta < beta fails")
    if len(P) != 2 or any(x <= 0 for x in P):
        problems.append("P must be strictly positive")
    elif P[0] * (gamma - alpha) + P[1] * (delta - beta) != 0:
        problems.append("P violates radial_balance for this frame")
    if len(Q) != 2 or not any(Q):
        problems.append("Q must be a nonzero 2-vector")
    if problems:
        raise FamilyError("invalid frame: " + "; ".join(problems), problems)


def enumerate_general(
    alpha: int,
    beta: int,
    gamma: int,
    delta: int,
    P,
    Q,
    diff,
    bounds: dict | None = None,
    positive_polar: bool = True,
) -> list[FamilyParams]:
    """Every parameter choice on the frame passing :func:`validate` with
    (a - a1, b - b1) = diff, sorted by (a, b, a1, b1, c, d, c1, d1).

    ``bounds`` may narrow any of the eight exponents to an inclusive range;
    ``positive_polar`` keeps only positive polar degree (else only nonzero).
    An incompatible diff (no k) gives an empty list.
    """
    P, Q, diff = tuple(P), tuple(Q), tuple(diff)
    _frame_check(alpha, beta, gamma, delta, P, Q)
    k = solve_k(Q, diff)
    if k is None:
        return []
    tops = {"a": alpha, "a1": alpha, "b": beta, "b1": beta, "c": gamma, "c1": gamma, "d": delta, "d1": delta}
    box = {}
    for name, top in tops.items():
        lo, hi = (bounds or {}).get(name, (0, top))
        box[name] = range(max(0, lo), min(top, hi) + 1)
    out = []
    for a, b in itertools.product(box["a"], box["b"]):
        a1, b1 = a - diff[0], b - diff[1]
        if a1 not in box["a1"] or b1 not in box["b1"]:
            continue
        for c, d in itertools.product(box["c"], box["d"]):
            c1, d1 = c - diff[0], d - diff[1]
            if c1 not in box["c1"] or d1 not in box["d1"]:
                continue
            p = FamilyParams(alpha, beta, gamma, delta, a, a1, b, b1, c, c1, d, d1, P, Q, k)
            rep = validate(p)
            if rep.passed and (rep.d_p > 0 or not positive_polar):
                out.append(p)
    out.sort(key=lambda p: p.exponents)
    return out


REFERENCE_FRAME = dict(alpha=3, beta=8, gamma=8, delta=7, P=(1, 5), Q=(1, 1))
REFERENCE_DIFF = (-1, 1)


def params_4_2(t) -> FamilyParams:
    """FamilyParams for an 8-tuple (a, b, a1, b1, c, d, c1, d1) on the 3,8,8,7 frame."""
    a, b, a1, b1, c, d, c1, d1 = t
    k = solve_k(REFERENCE_FRAME["Q"], (a - a1, b - b1)) or 0
    return FamilyParams(a=a, a1=a1, b=b, b1=b1, c=c, c1=c1, d=d, d1=d1, k=k, **REFERENCE_FRAME)


def enumerate_4_2() -> list[tuple[int, ...]]:
    """All (a, b, a1, b1, c, d, c1, d1) on the 3,8,8,7 frame with P = (1,5),
    Q = (1,1), difference (-1, 1) and positive polar degree."""
    return [p.exponents for p in enumerate_general(diff=REFERENCE_DIFF, **REFERENCE_FRAME)]


def case_of(t) -> str:
    """"I" when c = a+3, d = b-1; "II" when c = a+2, d = b (3,8,8,7 frame)."""
    a, b, _, _, c, d, _, _ = t
    if (c, d) == (a + 3, b - 1):
        return "I"
    if (c, d) == (a + 2, b):
        return "II"
    raise ValueError(f"{t} is in neither case")


# ---------------------------------------------------------------------------
# recognition

def recognize(f: MixedPolynomial) -> FamilyParams | None:
    """Read family parameters off a polynomial, or None if it is not of the
    family's shape (two variables, four terms +, -, +, + on two support
    points).  P is the primitive edge normal; k is chosen so that the first
    nonzero entry of Q is positive and Q is primitive."""
    if f.nvars != 2 or len(f.terms) != 4:
        return None
    sup = support(f)
    if len(sup.points) != 2:
        return None
    (x1, y1), (x2, y2) = sup.points
    if not (x1 < x2 and y1 > y2):
        return None
    left = [f.terms[i] for i in sup.terms_at[(x1, y1)]]
    right = [f.terms[i] for i in sup.terms_at[(x2, y2)]]
    if len(left) != 2 or len(right) != 2:
        return None
    if {t.coeff for t in left} != {ONE, -ONE} or any(t.coeff != ONE for t in right):
        return None
    t1 = next(t for t in left if t.coeff == ONE)
    t2 = next(t for t in left if t.coeff == -ONE)
    P = edge_normal((x1, y1), (x2, y2))
    diff = (t1.nu[0] - t2.nu[0], t1.nu[1] - t2.nu[1])
    g = gcd(*diff)
    for k in (g, -g):
        Q = (-diff[1] // k, diff[0] // k)
        if Q[0] > 0 or (Q[0] == 0 and Q[1] > 0):
            break
    Q = primitive(Q)
    for t3, t4 in (right, right[::-1]):
        p = FamilyParams(
            x1, y1, x2, y2,
            t1.nu[0], t2.nu[0], t1.nu[1], t2.nu[1],
            t3.nu[0], t4.nu[0], t3.nu[1], t4.nu[1],
            P, Q, k,
        )
        if validate(p).passed:
            return p
    return None
