import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mixedwh.errors import ZeroPolynomialError
from mixedwh.generators import random_holomorphic_wh
from mixedwh.homogeneity import (
    LADDER,
    classify,
    face_type,
    is_polar_wh,
    is_radially_wh,
    solve_polar_weights,
    solve_radial_weights,
)
from mixedwh.lattice import dot, in_lattice_span
from mixedwh.mixedpoly import MixedPolynomial, parse
from mixedwh.polyhedron import face_function, face_of

from .test_mixedpoly import polys

EX22 = "z1^2*zb1 - z2*zb2^2"


def test_is_radially_wh_examples(fixture_poly):
    assert is_radially_wh(parse(EX22, 2), (1, 1)) == 3
    assert is_radially_wh(fixture_poly("ex43"), (2, 3)) == 33
    assert is_radially_wh(fixture_poly("ex45"), (1, 3)) is None
    with pytest.raises(ZeroPolynomialError):
        is_radially_wh(MixedPolynomial.zero(2), (1, 1))


def test_is_polar_wh_examples(fixture_poly):
    assert is_polar_wh(parse(EX22, 2), (1, -1)) == 1
    assert is_polar_wh(fixture_poly("ex43"), (2, 3)) == 3
    rho = fixture_poly("rho2")
    assert is_polar_wh(rho, (5, -2)) == 0


def test_solve_radial_examples(fixture_poly):
    rad = solve_radial_weights(fixture_poly("ex43"))
    assert rad.kernel == [(2, 3)] and rad.witness == (2, 3) and rad.degree == 33
    f = fixture_poly("ex45")
    g = face_function(f, face_of(f, (1, 5)))
    rad = solve_radial_weights(g)
    assert rad.kernel == [(1, 5)] and rad.degree == 43
    f = parse("z1^2 + z1*zb2^3 + zb2^5", 2)
    rad = solve_radial_weights(f)
    assert rad.kernel == [] and rad.witness is None


def test_solve_polar_examples(fixture_poly):
    pol = solve_polar_weights(parse(EX22, 2))
    assert pol.kernel == [(1, -1)] and pol.degrees == [1]
    pol = solve_polar_weights(fixture_poly("rho2"))
    assert pol.kernel == [(1, 0), (0, 1)] and pol.degrees == [0, 0]
    assert not pol.nonzero_degree_possible
    f = fixture_poly("ex45")
    g = face_function(f, face_of(f, (1, 5)))
    assert in_lattice_span((1, 3), solve_polar_weights(g).kernel)
    assert is_polar_wh(g, (1, 3)) == 15


def test_classify_examples(fixture_poly):
    rep = classify(fixture_poly("ex43"))
    assert rep.ladder == "strongly_polar_positive"
    assert rep.common_weight == (2, 3) and rep.common_degrees == (33, 3)
    assert classify(parse(EX22, 2)).ladder == "mixed_wh"
    rho = classify(fixture_poly("rho2"))
    assert rho.is_mixed_wh and rho.ladder != "strongly_polar_positive"
    assert classify(parse("z1 + z1^2*zb1 + zb2", 2)).ladder == "polar_only"
    assert classify(parse("z1*zb2 + z2^2 + z1^2", 2)).ladder == "radial_only"


def test_face_type_examples(fixture_poly):
    f = fixture_poly("ex45")
    ft = face_type(f)
    assert ft.mixed_wh_face_type and len(ft.faces) == 7
    for row in ft.faces:
        if row.face.dim == 1:
            assert is_polar_wh(row.face_function, (1, 3)) == 15
    rho = face_type(fixture_poly("rho2"))
    assert rho.mixed_wh_face_type and not rho.strongly_polar_positive_face_type
    h = face_type(fixture_poly("ex43"))
    edge = [row for row in h.faces if row.face.dim == 1][0]
    assert edge.spp_weight == (2, 3)


# properties


@settings(max_examples=80)
@given(polys(n=None, max_terms=4, max_exp=3))
def test_kernels_brute_force(f):
    if f.is_zero():
        return
    rad, pol = solve_radial_weights(f), solve_polar_weights(f)
    for v in itertools.product(range(-10, 11), repeat=f.nvars):
        if f.nvars == 3 and any(abs(x) > 4 for x in v):
            continue
        r_const = len({dot(v, t.point) for t in f.terms}) == 1
        p_const = len({dot(v, t.polar) for t in f.terms}) == 1
        assert r_const == (in_lattice_span(v, rad.kernel) if rad.kernel else not any(v))
        assert p_const == (in_lattice_span(v, pol.kernel) if pol.kernel else not any(v))


@settings(max_examples=100)
@given(polys(n=None, max_terms=4, max_exp=4))
def test_reported_degrees_are_exact(f):
    if f.is_zero():
        return
    rep = classify(f)
    if rep.radial.witness is not None:
        assert all(dot(rep.radial.witness, t.point) == rep.radial.degree for t in f.terms)
        assert rep.radial.degree > 0
    for b, d in zip(rep.polar.kernel, rep.polar.degrees):
        assert all(dot(b, t.polar) == d for t in f.terms)
    if rep.common_weight is not None:
        assert all(x > 0 for x in rep.common_weight)
        d_r, d_p = rep.common_degrees
        assert is_radially_wh(f, rep.common_weight) == d_r
        assert is_polar_wh(f, rep.common_weight) == d_p


@settings(max_examples=100)
@given(polys(n=None, max_terms=4, max_exp=4), st.sampled_from([2, -1, "i", "3/2-i"]))
def test_ladder_monotone_and_scale_invariant(f, c):
    if f.is_zero():
        return
    rep = classify(f)
    if rep.ladder == "strongly_polar_positive":
        assert rep.common_degrees[1] > 0
    if rep.rank >= LADDER.index("strongly_mixed_wh"):
        assert rep.common_weight is not None and rep.is_mixed_wh
    if rep.is_mixed_wh:
        assert rep.radial.witness is not None and rep.polar.kernel
    assert classify(f * c).ladder == rep.ladder


def _holomorphic_with_weight(rng, P, m):
    """Random holomorphic f with P . nu = p1 * p2 * m on every term."""
    p1, p2 = P
    slots = [(p2 * t, p1 * (m - t)) for t in range(m + 1)]
    pick = rng.choice(len(slots), size=int(rng.integers(1, len(slots) + 1)), replace=False)
    return MixedPolynomial.from_terms(2, [(int(rng.integers(1, 6)), slots[i], (0, 0)) for i in pick])


def test_product_degree_additivity():
    rng = np.random.default_rng(11)
    for _ in range(30):
        p, P, d = random_holomorphic_wh(rng)
        q = _holomorphic_with_weight(rng, P, int(rng.integers(1, 4)))
        assert is_radially_wh(p * q, P) == is_radially_wh(p, P) + is_radially_wh(q, P)
