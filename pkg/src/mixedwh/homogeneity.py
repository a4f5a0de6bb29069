"""Radial and polar weighted homogeneity: checks, exact weight solving, ladder.

Radial weights solve P . ((nu + mu) - (nu0 + mu0)) = 0 over all terms and
polar weights Q . ((nu - mu) - (nu0 - mu0)) = 0; both are integer lattices.
Positivity questions on those lattices are decided exactly by
Fourier-Motzkin elimination.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DimensionError, ZeroPolynomialError
from .lattice import Vector, dot, find_in_cone, in_lattice_span, integer_kernel
from .mixedpoly import MixedPolynomial
from .polyhedron import Face, as_weight, compact_faces_2d, face_function, support

LADDER = (
    "none",
    "radial_only",
    "polar_only",
    "mixed_wh",
    "strongly_mixed_wh",
    "strongly_polar_positive",
)


def _nonzero(f: MixedPolynomial):
    if f.is_zero():
        raise ZeroPolynomialError("homogeneity is undefined for the zero polynomial")


def _check_len(f, W):
    if len(W) != f.nvars:
        raise DimensionError(f"weight has {len(W)} entries, polynomial has {f.nvars} variables")


def is_radially_wh(f: MixedPolynomial, P) -> int | None:
    """The radial degree of f for P, or None if f is not radially w.h. for P."""
    _nonzero(f)
    W = as_weight(P, "radial")
    _check_len(f, W)
    degs = {dot(W.entries, t.point) for t in f.terms}
    if len(degs) == 1:
        d = degs.pop()
        return d if d > 0 else None
    return None


def is_polar_wh(f: MixedPolynomial, Q) -> int | None:
    """The polar degree of f for Q (any integer, 0 included), or None."""
    _nonzero(f)
    W = as_weight(Q, "polar")
    _check_len(f, W)
    degs = {dot(W.entries, t.polar) for t in f.terms}
    return degs.pop() if len(degs) == 1 else None


def _radial_rows(f):
    p0 = f.terms[0].point
    return [[a - b for a, b in zip(t.point, p0)] for t in f.terms[1:]]


def _polar_rows(f):
    q0 = f.terms[0].polar
    return [[a - b for a, b in zip(t.polar, q0)] for t in f.terms[1:]]


def _unit_rows(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


@dataclass(frozen=True)
class RadialSolution:
    kernel: list[Vector]
    witness: Vector | None = None
    strict: bool = False  # witness strictly positive
    degree: int | None = None


@dataclass(frozen=True)
class PolarSolution:
    kernel: list[Vector]
    degrees: list[int] = field(default_factory=list)  # per kernel basis vector
    nonzero_degree_possible: bool = False
    nonzero_witness: Vector | None = None
    nonzero_degree: int | None = None


def solve_radial_weights(f: MixedPolynomial) -> RadialSolution:
    """Integer lattice of radial weights plus a positive witness if one exists.

    A strictly positive witness is preferred; failing that, a nonnegative
    nonzero weight with positive degree is returned with ``strict=False``.
    """
    _nonzero(f)
    n = f.nvars
    kernel = integer_kernel(_radial_rows(f), n)
    p0 = f.terms[0].point
    if not kernel or not any(p0):
        return RadialSolution(kernel)
    ones = (1,) * n
    if in_lattice_span(ones, kernel):
        return RadialSolution(kernel, ones, True, dot(ones, p0))
    w = find_in_cone(kernel, strict=_unit_rows(n))
    if w is not None:
        return RadialSolution(kernel, w, True, dot(w, p0))
    w = find_in_cone(kernel, strict=[p0], nonneg=_unit_rows(n))
    if w is not None:
        return RadialSolution(kernel, w, False, dot(w, p0))
    return RadialSolution(kernel)


def solve_polar_weights(f: MixedPolynomial) -> PolarSolution:
    _nonzero(f)
    kernel = integer_kernel(_polar_rows(f), f.nvars)
    q0 = f.terms[0].polar
    degrees = [dot(b, q0) for b in kernel]
    for b, d in zip(kernel, degrees):
        if d != 0:
            if d < 0:
                b, d = tuple(-x for x in b), -d
            return PolarSolution(kernel, degrees, True, b, d)
    return PolarSolution(kernel, degrees)


@dataclass(frozen=True)
class HomogeneityReport:
    radial: RadialSolution
    polar: PolarSolution
    ladder: str
    common_weight: Vector | None = None  # strictly positive, radial and polar at once
    common_degrees: tuple[int, int] | None = None  # (d_r, d_p) for common_weight

    @property
    def rank(self) -> int:
        return LADDER.index(self.ladder)

    @property
    def is_mixed_wh(self) -> bool:
        return self.rank >= LADDER.index("mixed_wh")

    def to_dict(self) -> dict:
        return {
            "ladder": self.ladder,
            "radial_kernel": [list(v) for v in self.radial.kernel],
            "radial_witness": list(self.radial.witness) if self.radial.witness else None,
            "radial_witness_strictly_positive": self.radial.strict,
            "radial_degree": self.radial.degree,
            "polar_kernel": [list(v) for v in self.polar.kernel],
            "polar_degrees": list(self.polar.degrees),
            "polar_nonzero_degree_possible": self.polar.nonzero_degree_possible,
            "common_weight": list(self.common_weight) if self.common_weight else None,
            "common_degrees": list(self.common_degrees) if self.common_degrees else None,
        }


def classify(f: MixedPolynomial) -> HomogeneityReport:
    """Place f on the ladder none < radial_only/polar_only < mixed_wh <
    strongly_mixed_wh < strongly_polar_positive (maximal true rung)."""
    _nonzero(f)
    n = f.nvars
    rad = solve_radial_weights(f)
    pol = solve_polar_weights(f)
    is_radial = rad.witness is not None
    is_polar = bool(pol.kernel)
    if not (is_radial and is_polar):
        ladder = "radial_only" if is_radial else "polar_only" if is_polar else "none"
        return HomogeneityReport(rad, pol, ladder)
    p0, q0 = f.terms[0].point, f.terms[0].polar
    common = integer_kernel(_radial_rows(f) + _polar_rows(f), n)
    positive = _unit_rows(n)
    if common and any(p0):
        w = find_in_cone(common, strict=positive + [q0])
        if w is not None:
            return HomogeneityReport(
                rad, pol, "strongly_polar_positive", w, (dot(w, p0), dot(w, q0))
            )
        ones = (1,) * n
        w = ones if in_lattice_span(ones, common) else find_in_cone(common, strict=positive)
        if w is not None:
            return HomogeneityReport(rad, pol, "strongly_mixed_wh", w, (dot(w, p0), dot(w, q0)))
    return HomogeneityReport(rad, pol, "mixed_wh")


# ---------------------------------------------------------------------------
# face types

def strongly_polar_positive_weight(f: MixedPolynomial, face: Face) -> Vector | None:
    """A strictly positive P with Delta(P) = face for which the face function
    is polar weighted homogeneous with positive polar degree, or None.

    Decided exactly: P must be constant on the face, strictly larger on every
    other support point of f, lie in the polar lattice of the face function
    and pair positively with its polar exponents.
    """
    g = face_function(f, face)
    n = f.nvars
    sup = support(f)
    p0 = g.terms[0].point
    off = [[a - b for a, b in zip(w, p0)] for w in sup.points if w not in face.points]
    lattice = integer_kernel(_radial_rows(g) + _polar_rows(g), n)
    if not lattice:
        return None
    return find_in_cone(lattice, strict=_unit_rows(n) + off + [g.terms[0].polar])


@dataclass(frozen=True)
class FaceClassification:
    face: Face
    face_function: MixedPolynomial
    report: HomogeneityReport
    spp_weight: Vector | None  # strongly polar positive weight within the face's cone


@dataclass(frozen=True)
class FaceTypeReport:
    faces: list[FaceClassification]
    mixed_wh_face_type: bool
    strongly_polar_positive_face_type: bool

    def to_dict(self) -> dict:
        return {
            "mixed_wh_face_type": self.mixed_wh_face_type,
            "strongly_polar_positive_face_type": self.strongly_polar_positive_face_type,
            "faces": [
                {
                    "dim": fc.face.dim,
                    "weight": list(fc.face.normal),
                    "face_function": str(fc.face_function),
                    "classification": fc.report.to_dict(),
                    "strongly_polar_positive_weight": list(fc.spp_weight) if fc.spp_weight else None,
                }
                for fc in self.faces
            ],
        }


def face_type(f: MixedPolynomial) -> FaceTypeReport:
    if f.nvars != 2:
        raise DimensionError(f"face type needs 2 variables, got {f.nvars}")
    rows = []
    for face in compact_faces_2d(f):
        g = face_function(f, face)
        rows.append(FaceClassification(face, g, classify(g), strongly_polar_positive_weight(f, face)))
    return FaceTypeReport(
        rows,
        all(r.report.is_mixed_wh for r in rows),
        all(r.spp_weight is not None for r in rows),
    )
