"""Radial Newton polyhedron Gamma_+(f): support, faces Delta(P), face functions.

Compact faces are enumerated for two variables only (the lower-left staircase
of the support); in higher dimension faces are reached through
:func:`face_of` with a caller-supplied weight.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Sequence

from .errors import DimensionError, WeightError, ZeroPolynomialError
from .lattice import affine_dimension, dot, primitive
from .mixedpoly import MixedPolynomial

Point = tuple[int, ...]


@dataclass(frozen=True)
class WeightVector:
    entries: tuple[int, ...]
    role: str = "radial"

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(x) for x in self.entries))
        if self.role not in ("radial", "polar"):
            raise WeightError(f"unknown weight role {self.role!r}")
        if not any(self.entries):
            raise WeightError("weight vector must be nonzero")
        if self.role == "radial" and any(x < 0 for x in self.entries):
            raise WeightError(f"radial weight {self.entries} has a negative entry")

    @property
    def strictly_positive(self) -> bool:
        return all(x > 0 for x in self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __call__(self, xi: Sequence[int]) -> int:
        return dot(self.entries, xi)

    def primitive(self) -> WeightVector:
        return WeightVector(primitive(self.entries), self.role)


def as_weight(P, role: str = "radial") -> WeightVector:
    if isinstance(P, WeightVector):
        if P.role != role:
            return WeightVector(P.entries, role)
        return P
    return WeightVector(tuple(P), role)


@dataclass(frozen=True)
class SupportSet:
    """Distinct points nu + mu, each mapped to the indices of its terms."""

    points: tuple[Point, ...]
    terms_at: dict[Point, tuple[int, ...]] = field(compare=False)

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)


def _require_nonzero(f: MixedPolynomial):
    if f.is_zero():
        raise ZeroPolynomialError("the zero polynomial has no Newton polyhedron")


def support(f: MixedPolynomial) -> SupportSet:
    _require_nonzero(f)
    at: dict[Point, list[int]] = {}
    for i, t in enumerate(f.terms):
        at.setdefault(t.point, []).append(i)
    pts = tuple(sorted(at))
    return SupportSet(pts, {p: tuple(at[p]) for p in pts})


def _radial(f: MixedPolynomial, P) -> WeightVector:
    W = as_weight(P, "radial")
    if len(W) != f.nvars:
        raise DimensionError(f"weight has {len(W)} entries, polynomial has {f.nvars} variables")
    return W


def min_value(f: MixedPolynomial, P) -> int:
    """d(P): the minimum of P over Gamma_+(f), attained at a support point."""
    _require_nonzero(f)
    W = _radial(f, P)
    return min(W(p) for p in support(f).points)


@dataclass(frozen=True)
class Face:
    defining_weight: WeightVector
    value: int
    points: tuple[Point, ...]
    term_indices: tuple[int, ...]
    dim: int

    @property
    def compact(self) -> bool:
        # Delta(P) is bounded exactly when P is strictly positive
        return self.defining_weight.strictly_positive

    @property
    def normal(self) -> tuple[int, ...]:
        return self.defining_weight.entries


def face_of(f: MixedPolynomial, P) -> Face:
    """Delta(P) = argmin of P over Gamma_+(f), with the terms lying on it."""
    sup = support(f)
    W = _radial(f, P)
    d = min(W(p) for p in sup.points)
    pts = tuple(p for p in sup.points if W(p) == d)
    idx = tuple(sorted(i for p in pts for i in sup.terms_at[p]))
    return Face(W, d, pts, idx, affine_dimension(pts))


def face_function(f: MixedPolynomial, face: Face) -> MixedPolynomial:
    """Sum of the terms of f whose nu + mu lies on ``face``."""
    check = face_of(f, face.defining_weight)
    if check.points != face.points or check.value != face.value:
        raise ValueError("face was not produced from this polynomial")
    return MixedPolynomial(f.nvars, tuple(f.terms[i] for i in face.term_indices))


# ---------------------------------------------------------------------------
# two variables: the staircase

@dataclass(frozen=True)
class Edge:
    start: Point  # smaller first coordinate
    end: Point
    normal: tuple[int, int]
    value: int


@dataclass(frozen=True)
class NewtonPolyhedron:
    support: SupportSet
    vertices: tuple[Point, ...] = ()  # n = 2: ordered by increasing first coordinate
    edges: tuple[Edge, ...] = ()


def _cross(o, a, b) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def edge_normal(p: Point, q: Point) -> tuple[int, int]:
    """Primitive inward normal of the staircase edge p -> q (p left of q)."""
    (x1, y1), (x2, y2) = p, q
    if not (x1 < x2 and y1 > y2):
        raise ValueError(f"{p} -> {q} is not a staircase edge")
    a, b = y1 - y2, x2 - x1
    g = gcd(a, b)
    return (a // g, b // g)


def staircase(points: Iterable[Point]) -> list[Point]:
    """Vertices of the lower-left convex boundary of points + R_+^2."""
    pts = sorted(set(points))
    # Pareto-minimal points: sweep by x, keep strictly decreasing y
    minimal = []
    for p in pts:
        if not minimal or p[1] < minimal[-1][1]:
            if minimal and minimal[-1][0] == p[0]:
                continue
            minimal.append(p)
    hull: list[Point] = []
    for p in minimal:
        # drop the middle point unless the turn is strictly counter-clockwise
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], p) <= 0:
            hull.pop()
        hull.append(p)
    return hull


def newton_polyhedron(f: MixedPolynomial) -> NewtonPolyhedron:
    sup = support(f)
    if f.nvars != 2:
        return NewtonPolyhedron(sup)
    verts = staircase(sup.points)
    edges = []
    for p, q in zip(verts, verts[1:]):
        n = edge_normal(p, q)
        edges.append(Edge(p, q, n, dot(n, p)))
    return NewtonPolyhedron(sup, tuple(verts), tuple(edges))


def _require_2d(f: MixedPolynomial):
    if f.nvars != 2:
        raise DimensionError(f"compact face enumeration needs 2 variables, got {f.nvars}")


def vertex_weight(f: MixedPolynomial, vertex) -> WeightVector:
    """A strictly positive weight whose face is exactly the given vertex.

    Interior staircase vertices get the primitive sum of the two adjacent
    edge normals.  The top-left end gets (M, 1) and the bottom-right end
    (1, M) with M = 1 + the largest coordinate spread of the support; a
    lone vertex gets (1, 1).
    """
    _require_2d(f)
    v = vertex.points[0] if isinstance(vertex, Face) else tuple(vertex)
    if isinstance(vertex, Face) and (vertex.dim != 0 or len(vertex.points) != 1):
        raise ValueError("not a vertex face")
    poly = newton_polyhedron(f)
    verts = list(poly.vertices)
    if v not in verts:
        raise ValueError(f"{v} is not a vertex of the Newton polyhedron")
    k = verts.index(v)
    if len(verts) == 1:
        return WeightVector((1, 1))
    pts = poly.support.points
    spread = max(max(p[i] for p in pts) - min(p[i] for p in pts) for i in range(2))
    M = 1 + spread
    if k == 0:
        return WeightVector((M, 1))
    if k == len(verts) - 1:
        return WeightVector((1, M))
    left, right = poly.edges[k - 1].normal, poly.edges[k].normal
    return WeightVector(primitive((left[0] + right[0], left[1] + right[1])))


def compact_faces_2d(f: MixedPolynomial) -> list[Face]:
    """All compact faces, walking the staircase: v0, e01, v1, e12, ..."""
    _require_2d(f)
    poly = newton_polyhedron(f)
    faces = []
    for k, v in enumerate(poly.vertices):
        faces.append(face_of(f, vertex_weight(f, v)))
        if k < len(poly.edges):
            faces.append(face_of(f, poly.edges[k].normal))
    return faces


def face_terms_text(f: MixedPolynomial, face: Face) -> list[str]:
    return [str(f.terms[i]) for i in face.term_indices]


def polyhedron_report(f: MixedPolynomial) -> dict:
    """JSON-ready description of the support, staircase and compact faces."""
    poly = newton_polyhedron(f)
    sup = poly.support
    out = {
        "nvars": f.nvars,
        "support": [
            {"point": list(p), "terms": [str(f.terms[i]) for i in sup.terms_at[p]]}
            for p in sup.points
        ],
    }
    if f.nvars == 2:
        out["hull_vertices"] = [list(v) for v in poly.vertices]
        out["edges"] = [
            {"start": list(e.start), "end": list(e.end), "normal": list(e.normal), "value": e.value}
            for e in poly.edges
        ]
        out["faces"] = [face_report(f, fc) for fc in compact_faces_2d(f)]
    return out


def face_report(f: MixedPolynomial, face: Face) -> dict:
    return {
        "dim": face.dim,
        "weight": list(face.normal),
        "weight_rule": "edge normal" if face.dim == 1 else "vertex representative",
        "value": face.value,
        "compact": face.compact,
        "points": [list(p) for p in face.points],
        "terms": face_terms_text(f, face),
        "face_function": str(face_function(f, face)),
    }
