import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mixedwh.errors import DimensionError, WeightError, ZeroPolynomialError
from mixedwh.homogeneity import is_radially_wh
from mixedwh.lattice import dot
from mixedwh.mixedpoly import MixedPolynomial, parse
from mixedwh.polyhedron import (
    WeightVector,
    compact_faces_2d,
    face_function,
    face_of,
    min_value,
    newton_polyhedron,
    polyhedron_report,
    support,
    vertex_weight,
)

from .test_mixedpoly import polys


def test_support_examples(fixture_poly):
    assert support(parse("z1^2*zb1 - z2*zb2^2", 2)).points == ((0, 3), (3, 0))
    sup = support(fixture_poly("ex45"))
    assert sup.points == ((0, 9), (3, 8), (8, 7), (55, 0))
    assert [len(sup.terms_at[p]) for p in sup.points] == [1, 2, 2, 1]
    assert support(parse("z1*zb1", 1)).points == ((2,),)
    with pytest.raises(ZeroPolynomialError):
        support(MixedPolynomial.zero(2))


@pytest.mark.parametrize("P, d", [((1, 3), 27), ((1, 5), 43), ((7, 47), 385)])
def test_min_value(fixture_poly, P, d):
    assert min_value(fixture_poly("ex45"), P) == d


def test_weight_validation(fixture_poly):
    with pytest.raises(WeightError):
        min_value(fixture_poly("ex45"), (1, -1))
    with pytest.raises(WeightError):
        WeightVector((0, 0))
    assert WeightVector((1, -1), "polar").entries == (1, -1)


def test_face_of_examples(fixture_poly):
    f = fixture_poly("ex45")
    face = face_of(f, (1, 3))
    assert face.points == ((0, 9), (3, 8)) and face.dim == 1 and len(face.term_indices) == 3
    face = face_of(f, (7, 47))
    assert face.points == ((8, 7), (55, 0)) and face.dim == 1 and len(face.term_indices) == 3
    mono = parse("z1^2*zb2", 2)
    face = face_of(mono, (3, 5))
    assert face.points == ((2, 1),) and face.dim == 0
    # a non-strictly-positive weight gives a non-compact face
    assert not face_of(f, (0, 1)).compact


def test_face_function_examples(fixture_poly):
    f = fixture_poly("ex45")
    assert face_function(f, face_of(f, (1, 3))) == parse(
        "z2^7*zb2^2 + z1^3*z2^6*zb2^2 - zb1^3*z2^7*zb2", 2
    )
    assert face_function(f, face_of(f, (1, 5))) == parse(
        "z1^3*z2^6*zb2^2 - zb1^3*z2^7*zb2 + z1^7*zb1*z2^5*zb2^2 + z1^4*zb1^4*z2^6*zb2", 2
    )
    h = fixture_poly("ex43")
    assert face_function(h, face_of(h, (2, 3))) == h
    with pytest.raises(ValueError):
        face_function(h, face_of(f, (1, 3)))


def test_compact_faces_examples(fixture_poly):
    f = fixture_poly("ex45")
    faces = compact_faces_2d(f)
    assert [fc.dim for fc in faces] == [0, 1, 0, 1, 0, 1, 0]
    assert [fc.points for fc in faces if fc.dim == 0] == [((0, 9),), ((3, 8),), ((8, 7),), ((55, 0),)]
    assert [fc.normal for fc in faces if fc.dim == 1] == [(1, 3), (1, 5), (7, 47)]
    assert len(compact_faces_2d(parse("z1*zb2^3", 2))) == 1
    h = fixture_poly("ex43")
    hf = compact_faces_2d(h)
    assert [fc.points for fc in hf] == [((3, 9),), ((3, 9), (6, 7)), ((6, 7),)]
    with pytest.raises(DimensionError):
        compact_faces_2d(parse("z1*z2*z3", 3))


def test_vertex_weight_examples(fixture_poly):
    f = fixture_poly("ex45")
    assert vertex_weight(f, (3, 8)).entries == (1, 4)
    assert face_of(f, (1, 4)).points == ((3, 8),)
    # top-left end of the staircase: the first coordinate weighs more
    w = vertex_weight(f, (0, 9))
    assert w.entries[0] > w.entries[1] == 1
    assert face_of(f, w).points == ((0, 9),)
    w = vertex_weight(f, (55, 0))
    assert face_of(f, w).points == ((55, 0),)
    assert vertex_weight(parse("z1*zb2", 2), (1, 1)).entries == (1, 1)
    with pytest.raises(ValueError):
        vertex_weight(f, (3, 9))


def test_report_keys(fixture_poly):
    rep = polyhedron_report(fixture_poly("ex45"))
    assert rep["hull_vertices"] == [[0, 9], [3, 8], [8, 7], [55, 0]]
    assert [e["value"] for e in rep["edges"]] == [27, 43, 385]


# properties


@settings(max_examples=100)
@given(polys(n=2, max_terms=8, max_exp=6), st.integers(1, 30), st.integers(1, 30))
def test_face_of_is_a_compact_face(f, p1, p2):
    if f.is_zero():
        return
    faces = {fc.points for fc in compact_faces_2d(f)}
    assert face_of(f, (p1, p2)).points in faces


@settings(max_examples=100)
@given(polys(n=2, max_terms=8, max_exp=6))
def test_staircase_structure(f):
    if f.is_zero():
        return
    poly = newton_polyhedron(f)
    verts = poly.vertices
    assert len(poly.edges) == len(verts) - 1
    assert all(verts[k][0] < verts[k + 1][0] and verts[k][1] > verts[k + 1][1] for k in range(len(verts) - 1))
    slopes = [e.normal[0] / e.normal[1] for e in poly.edges]
    # the staircase is convex: edges get flatter from left to right
    assert all(a > b for a, b in zip(slopes, slopes[1:]))
    for e in poly.edges:
        assert all(x > 0 for x in e.normal) and math.gcd(*e.normal) == 1
        assert all(dot(e.normal, p) >= e.value for p in poly.support.points)


@settings(max_examples=100)
@given(polys(n=2, max_terms=8, max_exp=6))
def test_face_functions_split_terms(f):
    if f.is_zero():
        return
    for fc in compact_faces_2d(f):
        assert fc.compact
        g = face_function(f, fc)
        assert is_radially_wh(g, fc.normal) == fc.value or fc.value == 0
        inside = set(fc.term_indices)
        for i, t in enumerate(f.terms):
            v = dot(fc.normal, t.point)
            assert (v == fc.value) == (i in inside)
            assert v >= fc.value
