"""Per-face non-degeneracy reports and the true non-degeneracy verdict (n = 2).

Every fact carries an evidence level: ``certified`` (exact argument),
``probed`` (seeded numerical search, within budget) or ``unknown``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import DimensionError
from ..homogeneity import classify
from ..mixedpoly import MixedPolynomial
from ..polyhedron import Face, compact_faces_2d, face_function
from .certificates import (
    Certificate,
    definite_real_part_certificate,
    monomial_certificate,
    real_valued_certificate,
)
from .probes import DEFAULT_BUDGET, DEFAULT_RADII, DEFAULT_TOL, ProbeResult, critical_probe, zero_probe
from .witnesses import holomorphic_zero_witness

LEVELS = ("certified", "probed", "unknown")
# strongest evidence first: used to rank failing faces
_SOURCE_RANK = {
    "family": 0,
    "monomial": 1,
    "definite_real_part": 2,
    "real_valued": 2,
    "holomorphic_root": 3,
    "probe": 4,
}


@dataclass(frozen=True)
class ProbeSettings:
    radii: tuple[float, float] = DEFAULT_RADII
    budget: int = DEFAULT_BUDGET
    seed: int = 0
    tol: float = DEFAULT_TOL


@dataclass(frozen=True)
class Verdict:
    value: bool | None
    level: str
    source: str
    reason: str

    def to_dict(self) -> dict:
        return {"value": self.value, "level": self.level, "source": self.source, "reason": self.reason}


@dataclass(frozen=True)
class ZeroEvidence:
    empty: bool | None  # True: no torus zero
    level: str
    source: str
    certificate: Certificate | None = None
    probe: ProbeResult | None = None
    witness: tuple[complex, ...] | None = None

    def to_dict(self) -> dict:
        return {
            "empty": self.empty,
            "level": self.level,
            "source": self.source,
            "certificate": None if self.certificate is None else self.certificate.to_dict(),
            "probe": None if self.probe is None else self.probe.to_dict(),
            "witness": None if self.witness is None else [[c.real, c.imag] for c in self.witness],
        }


def _family_certificate(g: MixedPolynomial) -> Certificate | None:
    from ..family import certify_empty, recognize

    p = recognize(g)
    if p is None:
        return None
    cert = certify_empty(p, probe=False)
    return Certificate(
        "family",
        "four-term family: all five conditions hold exactly, so g has no zero on the torus",
        {"params": p.to_dict(), "sign": cert.sign, "d_r": cert.d_r, "d_p": cert.d_p},
    )


def zero_evidence(g: MixedPolynomial, settings: ProbeSettings = ProbeSettings()) -> ZeroEvidence:
    """Whether g vanishes somewhere on C*^n, strongest argument first."""
    for make in (monomial_certificate, _family_certificate, definite_real_part_certificate):
        cert = make(g)
        if cert is not None:
            return ZeroEvidence(True, "certified", cert.kind, cert)
    if g.nvars == 2 and g.is_holomorphic() and len(g.terms) >= 2:
        rad = classify(g).radial
        if rad.witness is not None and rad.strict:
            z = holomorphic_zero_witness(g)
            return ZeroEvidence(False, "certified", "holomorphic_root", witness=z)
    pr = zero_probe(g, settings.radii, settings.budget, settings.seed, settings.tol)
    if pr.found:
        return ZeroEvidence(False, "probed", "probe", probe=pr, witness=pr.point)
    return ZeroEvidence(True, "probed", "probe", probe=pr)


@dataclass(frozen=True)
class FaceReport:
    face: Face
    face_function: MixedPolynomial
    classification: dict
    zeros: ZeroEvidence
    critical: ProbeResult | None
    critical_certificate: Certificate | None
    newton_nondegenerate: Verdict
    strongly_nondegenerate: Verdict
    surjectivity: str  # "witnessed" | "impossible" | "not_required" | "unknown"
    chain: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "dim": self.face.dim,
            "weight": list(self.face.normal),
            "points": [list(p) for p in self.face.points],
            "face_function": str(self.face_function),
            "classification": self.classification,
            "zero_set": self.zeros.to_dict(),
            "critical_probe": None if self.critical is None else self.critical.to_dict(),
            "critical_certificate": None if self.critical_certificate is None else self.critical_certificate.to_dict(),
            "newton_nondegenerate": self.newton_nondegenerate.to_dict(),
            "strongly_nondegenerate": self.strongly_nondegenerate.to_dict(),
            "surjectivity": self.surjectivity,
            "chain": list(self.chain),
        }


def face_nondegeneracy(
    f: MixedPolynomial, face: Face, settings: ProbeSettings = ProbeSettings()
) -> FaceReport:
    g = face_function(f, face)
    rep = classify(g)
    rad, pol = rep.radial, rep.polar
    d_r_pos = rad.witness is not None and rad.strict
    d_p_nonzero = pol.nonzero_degree_possible
    zeros = zero_evidence(g, settings)
    chain: list[str] = [f"face function is {rep.ladder}"]

    # Newton non-degeneracy: no mixed critical point of g on g = 0
    everywhere_critical = real_valued_certificate(g)
    critical = None
    if zeros.empty and zeros.level == "certified":
        nd = Verdict(True, "certified", zeros.source, "no zero on the torus, so no critical zero")
        chain.append("zero set empty (certified) => Newton non-degenerate")
    elif everywhere_critical is not None and zeros.empty is False:
        nd = Verdict(False, "certified" if zeros.level == "certified" else "probed", "real_valued",
                     "every point is mixed critical and a torus zero exists")
        chain.append("every point mixed critical and a zero exists => Newton degenerate")
    else:
        # with d_r > 0 and d_p != 0 every mixed critical point is a zero
        zeros_only = not (d_r_pos and d_p_nonzero)
        critical = critical_probe(g, settings.radii, settings.budget, settings.seed, settings.tol, zeros_only=zeros_only)
        if critical.found:
            nd = Verdict(False, "probed", "probe", "critical zero found")
            chain.append("critical zero found => Newton degenerate")
        else:
            why = "no zero found" if zeros.empty else "no critical zero found"
            nd = Verdict(True, "probed", "probe", why)
            chain.append(f"{why} => consistent with Newton non-degenerate")

    # strong non-degeneracy: no mixed critical point at all, plus surjectivity when dim >= 1
    if everywhere_critical is not None:
        strong_crit = Verdict(False, "certified", "real_valued", "every point is a mixed critical point")
    elif len(g.terms) == 1:
        # d(c z^nu zbar^mu) along log r_j and theta_j is (nu_j + mu_j) m and
        # i (nu_j - mu_j) m, which span C unless nu = mu
        strong_crit = Verdict(True, "certified", "monomial", "a monomial with nu != mu has no mixed critical point")
    else:
        if critical is None or critical.kind != "critical" or not (d_r_pos and d_p_nonzero):
            critical = critical_probe(g, settings.radii, settings.budget, settings.seed, settings.tol)
        if critical.found:
            strong_crit = Verdict(False, "probed", "probe", "mixed critical point found")
        else:
            strong_crit = Verdict(True, "probed", "probe", "no mixed critical point found")
    if face.dim == 0:
        surj = "not_required"
    elif zeros.empty:
        surj = "impossible"
    elif d_r_pos and d_p_nonzero:
        surj = "witnessed"  # one zero plus reach_target along the torus orbits
    else:
        surj = "unknown"

    if strong_crit.value is False:
        strong = strong_crit
        chain.append(f"{strong_crit.reason} => not strongly non-degenerate")
    elif surj == "impossible":
        strong = Verdict(False, zeros.level, zeros.source, "zero set empty on a face of dimension >= 1, so not surjective")
        chain.append("empty zero set on a dim >= 1 face => not surjective => not strongly non-degenerate")
    elif surj == "unknown":
        strong = Verdict(None, "unknown", "probe", "surjectivity not witnessed (polar degree 0)")
        chain.append("surjectivity undecided")
    else:
        level = "certified" if strong_crit.level == "certified" and face.dim == 0 else "probed"
        strong = Verdict(True, level, strong_crit.source, "no critical point found" + ("" if face.dim == 0 else "; surjective via zero and torus action"))
        chain.append("no critical point found" + (", surjectivity not required" if face.dim == 0 else ", zero + d_p != 0 => surjective"))

    return FaceReport(
        face, g, rep.to_dict(), zeros, critical, everywhere_critical, nd, strong, surj, chain
    )


def _require_2d(f: MixedPolynomial):
    if f.nvars != 2:
        raise DimensionError(f"non-degeneracy reports need 2 variables, got {f.nvars}")


def nondegeneracy_report(f: MixedPolynomial, settings: ProbeSettings = ProbeSettings()) -> list[FaceReport]:
    _require_2d(f)
    return [face_nondegeneracy(f, face, settings) for face in compact_faces_2d(f)]


@dataclass(frozen=True)
class FailingFace:
    report: FaceReport
    reason: str
    level: str
    source: str

    def to_dict(self) -> dict:
        return {
            "weight": list(self.report.face.normal),
            "dim": self.report.face.dim,
            "reason": self.reason,
            "level": self.level,
            "source": self.source,
        }


@dataclass(frozen=True)
class TrueNondegeneracy:
    value: bool
    level: str
    failing: list[FailingFace]  # strongest evidence first
    faces: list[FaceReport]

    @property
    def failing_face(self) -> Face | None:
        return self.failing[0].report.face if self.failing else None

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "level": self.level,
            "failing_face": None if not self.failing else list(self.failing_face.normal),
            "failing": [ff.to_dict() for ff in self.failing],
        }


def true_nondegeneracy_check(
    f: MixedPolynomial,
    settings: ProbeSettings = ProbeSettings(),
    faces: list[FaceReport] | None = None,
) -> TrueNondegeneracy:
    """Newton non-degenerate over every compact face, with a torus zero on
    every face of dimension >= 1.

    A false verdict lists every failing face; the first is the one backed by
    the strongest evidence (family certificate, then other exact
    certificates, then probes).
    """
    _require_2d(f)
    faces = faces if faces is not None else nondegeneracy_report(f, settings)
    failing = []
    levels = []
    for fr in faces:
        nd = fr.newton_nondegenerate
        levels.append(nd.level)
        if nd.value is False:
            failing.append(FailingFace(fr, "Newton degenerate: " + nd.reason, nd.level, nd.source))
        if fr.face.dim >= 1:
            levels.append(fr.zeros.level)
            if fr.zeros.empty:
                failing.append(FailingFace(fr, "zero set empty on the torus", fr.zeros.level, fr.zeros.source))
    if failing:
        failing.sort(key=lambda ff: _SOURCE_RANK.get(ff.source, len(_SOURCE_RANK)))
        return TrueNondegeneracy(False, failing[0].level, failing, faces)
    level = max(levels, key=LEVELS.index) if levels else "certified"
    return TrueNondegeneracy(True, level, [], faces)
