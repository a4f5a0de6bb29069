import dataclasses

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mixedwh.errors import FamilyError
from mixedwh.family import (
    CONDITIONS,
    REFERENCE_DIFF,
    REFERENCE_FRAME,
    FamilyParams,
    build_g,
    case_of,
    certify_empty,
    enumerate_4_2,
    enumerate_general,
    params_4_2,
    recognize,
    solve_k,
    validate,
)
from mixedwh.homogeneity import is_polar_wh, is_radially_wh
from mixedwh.mixedpoly import parse
from mixedwh.polyhedron import face_function, face_of, support

GRID = FamilyParams(
    alpha=3, beta=8, gamma=8, delta=7, a=0, a1=1, b=6, b1=5, c=3, c1=4, d=5, d1=4,
    P=(1, 5), Q=(1, 1), k=-1,
)
H = FamilyParams(
    alpha=3, beta=9, gamma=6, delta=7, a=0, a1=3, b=6, b1=4, c=0, c1=3, d=6, d1=4,
    P=(2, 3), Q=(2, 3), k=-1,
)
# passes everything except the polar degree, which is 0
FLAT = FamilyParams(
    alpha=1, beta=3, gamma=2, delta=2, a=0, a1=1, b=2, b1=1, c=0, c1=1, d=2, d1=1,
    P=(1, 1), Q=(1, 1), k=-1,
)


def test_validate_grid_instance():
    rep = validate(GRID)
    assert rep.passed and rep.phase_identity
    assert [c.name for c in rep.checks] == list(CONDITIONS)
    # 2(a-c) - alpha + gamma = -1 and 2(b-d) - beta + delta = 1, equal to the difference itself
    assert rep.sign == "+"
    assert (rep.d_r, rep.d_p) == (43, 1)
    assert case_of(GRID.exponents) == "I"


def test_validate_h():
    rep = validate(H)
    assert rep.passed and rep.sign == "-" and rep.phase_identity
    assert H.diff == (-3, 2)
    assert rep.checks[3].witness["lhs"] == [3, -2]
    assert (rep.d_r, rep.d_p) == (33, 3)


def test_validate_perturbed():
    bad = dataclasses.replace(H, d1=H.d1 + 1)
    rep = validate(bad)
    assert not rep.passed and "difference_match" in rep.failed
    with pytest.raises(FamilyError):
        certify_empty(bad, probe=False)


def test_zero_polar_degree_gets_no_certificate():
    rep = validate(FLAT)
    assert rep.failed == ["nonzero_polar_degree"]
    with pytest.raises(FamilyError):
        certify_empty(FLAT, probe=False)


def test_build_g(fixture_poly):
    assert build_g(H) == fixture_poly("ex43")
    g = build_g(params_4_2((2, 4, 3, 3, 4, 4, 5, 3)))
    assert len(g.terms) == 4
    assert support(g).points == ((3, 8), (8, 7))
    assert [t.coeff for t in build_g(GRID).terms].count(-1) == 1
    with pytest.raises(FamilyError):
        build_g(dataclasses.replace(GRID, a1=GRID.a, b1=GRID.b))
    with pytest.raises(FamilyError):
        build_g(dataclasses.replace(GRID, a=4))


def test_certify_h():
    cert = certify_empty(H, radii=(1e-2, 1e2), budget=2000)
    assert (cert.d_r, cert.d_p, cert.sign) == (33, 3, "-")
    assert cert.corroboration.outcome == "none_found"
    assert cert.to_dict()["statement"] == "g has no zero on C*^2"


def test_enumerate_4_2_structure():
    found = enumerate_4_2()
    assert len(found) == 21 and found == sorted(found)
    for a, b, a1, b1, c, d, c1, d1 in found:
        assert (a1, b1, c1, d1) == (a + 1, b - 1, c + 1, d - 1)
    cases = [case_of(t) for t in found]
    assert cases.count("I") == 12 and cases.count("II") == 9


def test_enumerate_general_examples():
    got = enumerate_general(diff=REFERENCE_DIFF, **REFERENCE_FRAME)
    assert [p.exponents for p in got] == enumerate_4_2()
    h_frame = enumerate_general(3, 9, 6, 7, (2, 3), (2, 3), (-3, 2))
    assert H in h_frame
    assert enumerate_general(diff=(1, 2), **REFERENCE_FRAME) == []
    with pytest.raises(FamilyError):
        enumerate_general(3, 8, 8, 7, (1, 4), (1, 1), (-1, 1))
    with pytest.raises(FamilyError):
        enumerate_general(8, 8, 3, 7, (1, 5), (1, 1), (-1, 1))


def test_enumerate_bounds_and_sign_filter():
    narrow = enumerate_general(diff=REFERENCE_DIFF, bounds={"a": (0, 0)}, **REFERENCE_FRAME)
    assert narrow and all(p.a == 0 for p in narrow)
    everything = enumerate_general(diff=REFERENCE_DIFF, positive_polar=False, **REFERENCE_FRAME)
    assert len(everything) >= 21
    assert all(validate(p).d_p != 0 for p in everything)


def test_solve_k():
    assert solve_k((1, 1), (-1, 1)) == -1
    assert solve_k((2, 3), (-3, 2)) == -1
    assert solve_k((1, 1), (1, 2)) is None
    assert solve_k((0, 1), (1, 0)) == 1
    assert solve_k((1, 1), (0, 0)) is None


def test_params_json_round_trip():
    assert FamilyParams.from_dict(H.to_dict()) == H
    d = H.to_dict()
    del d["k"]
    with pytest.raises(FamilyError):
        FamilyParams.from_dict(d)
    with pytest.raises(FamilyError):
        FamilyParams.from_dict({**H.to_dict(), "e": 1})


def test_recognize(fixture_poly):
    h = fixture_poly("ex43")
    p = recognize(h)
    assert p is not None and build_g(p) == h and validate(p).passed
    for t in enumerate_4_2():
        g = build_g(params_4_2(t))
        assert build_g(recognize(g)) == g
    assert recognize(fixture_poly("ex45")) is None
    assert recognize(parse("z1*zb2 - z2*zb1 + z1^3 + z2^3", 2)) is None


def _family_instances():
    out = [params_4_2(t) for t in enumerate_4_2()]
    out += enumerate_general(3, 9, 6, 7, (2, 3), (2, 3), (-3, 2))
    out += enumerate_general(1, 4, 2, 3, (1, 1), (1, -1), (-1, -1), positive_polar=False)
    return out


@pytest.mark.parametrize("p", _family_instances(), ids=lambda p: "-".join(map(str, p.exponents)))
def test_instance_invariants(p):
    g = build_g(p)
    d_r = p.P[0] * p.alpha + p.P[1] * p.beta
    assert d_r == p.P[0] * p.gamma + p.P[1] * p.delta > 0
    assert is_radially_wh(g, p.P) == d_r
    d_p = p.Q[0] * (2 * p.a - p.alpha) + p.Q[1] * (2 * p.b - p.beta)
    assert d_p != 0 and is_polar_wh(g, p.Q) == d_p
    face = face_of(g, p.P)
    assert face.dim == 1 and face_function(g, face) == g


small = st.integers(-6, 6)


@settings(max_examples=300)
@given(st.tuples(*[small] * 8), st.sampled_from([1, -1]))
def test_phase_identity_follows(vals, s):
    # choose gamma, delta so that difference_match and sign_relation hold by construction
    alpha, beta, a, b, c, d, e1, e2 = vals
    a1, b1, c1, d1 = a - e1, b - e2, c - e1, d - e2
    gamma = s * e1 - 2 * (a - c) + alpha
    delta = s * e2 - 2 * (b - d) + beta
    assert (2 * (a - c) - alpha + gamma, 2 * (b - d) - beta + delta) == (s * e1, s * e2)
    phase = ((a + a1 - alpha) - (c + c1 - gamma), (b + b1 - beta) - (d + d1 - delta))
    assert phase == (s * e1, s * e2)
