"""Acceptance gate: one test per criterion, each with its time limit.

Run alone with ``pytest tests/test_acceptance.py -v``; a PASS/FAIL line per
criterion is printed at the end of the session.
"""

import cmath
import math
import time

import numpy as np
import pytest

from mixedwh.analysis import (
    euler_polar,
    euler_radial,
    holomorphic_zero_witness,
    oka_residual,
    polar_action_check,
    radial_action_check,
    reach_target,
    true_nondegeneracy_check,
    zero_probe,
)
from mixedwh.family import build_g, case_of, certify_empty, enumerate_4_2, params_4_2, recognize, validate
from mixedwh.generators import (
    random_holomorphic_wh,
    random_point,
    random_polar_wh,
    random_radial_wh,
    random_torus_point,
)
from mixedwh.homogeneity import classify, is_polar_wh, is_radially_wh, solve_polar_weights, solve_radial_weights
from mixedwh.mixedpoly import MixedPolynomial, evaluate, is_convenient, parse, term_magnitude_sum
from mixedwh.polyhedron import compact_faces_2d, face_function, support

pytestmark = pytest.mark.acceptance


def criterion(record_property, label):
    record_property("criterion", label)
    print(f"\ncriterion {label}")


def test_1_mixed_weights(record_property, fixture_poly):
    criterion(record_property, "1 radial and polar weights of the three-term sample")
    t0 = time.perf_counter()
    f = fixture_poly("ex22")
    rad, pol = solve_radial_weights(f), solve_polar_weights(f)
    assert rad.kernel == [(1, 1)] and rad.witness == (1, 1) and rad.degree == 3
    assert pol.kernel == [(1, -1)] and pol.nonzero_witness == (1, -1) and pol.nonzero_degree == 1
    assert time.perf_counter() - t0 < 1


def test_2_staircase_verdict(record_property, fixture_poly):
    criterion(record_property, "2 staircase polynomial: polyhedron and verdict")
    t0 = time.perf_counter()
    f = fixture_poly("ex45")
    assert set(support(f).points) == {(0, 9), (3, 8), (8, 7), (55, 0)}
    faces = compact_faces_2d(f)
    assert len(faces) == 7
    edges = [fc for fc in faces if fc.dim == 1]
    assert [fc.normal for fc in edges] == [(1, 3), (1, 5), (7, 47)]
    funcs = [face_function(f, fc) for fc in edges]
    assert [len(g.terms) for g in funcs] == [3, 4, 3]
    degrees = []
    for fc, g in zip(edges, funcs):
        pol = solve_polar_weights(g)
        assert pol.kernel == [(1, 3)]
        degrees.append((is_radially_wh(g, fc.normal), is_polar_wh(g, (1, 3))))
    assert degrees == [(27, 15), (43, 15), (385, 15)]
    assert is_convenient(f)
    verdict = true_nondegeneracy_check(f)
    assert verdict.value is False
    assert verdict.failing_face.normal == (1, 5)
    assert time.perf_counter() - t0 < 1


def _grid_oracle():
    """All 8-tuples on the exponent box, filtered by the conditions as stated."""
    ax = [np.arange(4), np.arange(9), np.arange(4), np.arange(9), np.arange(9), np.arange(8), np.arange(9), np.arange(8)]
    a, b, a1, b1, c, d, c1, d1 = np.meshgrid(*ax, indexing="ij", sparse=True)
    cond = (a - a1 == -1) & (b - b1 == 1) & (c - c1 == -1) & (d - d1 == 1)
    x, y = 2 * (a - c) - 3 + 8, 2 * (b - d) - 8 + 7
    cond = cond & (((x == -1) & (y == 1)) | ((x == 1) & (y == -1)))
    cond = cond & ((2 * a - 3) + (2 * b - 8) > 0)
    idx = np.argwhere(cond)
    return sorted(tuple(int(v) for v in row) for row in idx)


def test_3_family_enumeration(record_property):
    criterion(record_property, "3 family enumeration on the 3,8,8,7 frame")
    t0 = time.perf_counter()
    found = enumerate_4_2()
    assert len(found) == 21
    cases = [case_of(t) for t in found]
    assert cases.count("I") == 12 and cases.count("II") == 9
    for t in found:
        p = params_4_2(t)
        assert validate(p).passed
        certify_empty(p, probe=True, budget=1000)
    assert sorted(found) == _grid_oracle()
    assert time.perf_counter() - t0 < 10


def test_4_strongly_polar_positive(record_property, fixture_poly):
    criterion(record_property, "4 strongly polar positive family member, empty zero set")
    t0 = time.perf_counter()
    h = fixture_poly("ex43")
    rep = classify(h)
    assert rep.ladder == "strongly_polar_positive"
    assert rep.common_weight == (2, 3) and rep.common_degrees == (33, 3)
    params = recognize(h)
    assert params is not None
    cert = certify_empty(params, probe=False)
    assert (cert.d_r, cert.d_p) == (33, 3)
    probe = zero_probe(h, radii=(1e-2, 1e2), budget=10**5, seed=0)
    assert probe.outcome == "none_found" and probe.min_seen > 0
    assert time.perf_counter() - t0 < 30


def test_5_euler_suite(record_property):
    criterion(record_property, "5 exact Euler identities")
    t0 = time.perf_counter()
    rng = np.random.default_rng(5)
    for k in range(100):
        n = int(rng.integers(1, 4))
        nterms = int(rng.integers(1, 7))
        if k < 50:
            f, W, d = random_radial_wh(rng, n, nterms)
            check = euler_radial
        else:
            f, W, d = random_polar_wh(rng, n, nterms)
            check = euler_polar
        for _ in range(10):
            res = check(f, W, d, random_point(rng, n))
            assert res.exact and res.lhs == res.rhs and res.residual == 0
    assert time.perf_counter() - t0 < 60


def test_6_action_suite(record_property):
    criterion(record_property, "6 torus action identities")
    t0 = time.perf_counter()
    rng = np.random.default_rng(6)
    worst = 0.0
    for k in range(200):
        n = int(rng.integers(1, 4))
        z = random_torus_point(rng, n)
        if k % 2 == 0:
            f, P, d = random_radial_wh(rng, n, int(rng.integers(1, 7)))
            worst = max(worst, radial_action_check(f, P, d, float(rng.uniform(0.5, 2.0)), z))
        else:
            f, Q, d = random_polar_wh(rng, n, int(rng.integers(1, 7)))
            worst = max(worst, polar_action_check(f, Q, d, float(rng.uniform(0, 2 * math.pi)), z))
    assert worst <= 1e-9
    g = parse("z1^2*zb1 - z2*zb2^2 + z1*z2")
    z = (1.1 + 0.3j, 0.7 - 0.9j)
    assert radial_action_check(g, (1, 1), 3, 1.7, z) > 1e-3
    assert polar_action_check(g, (1, -1), 1, 1.3, z) > 1e-3
    assert time.perf_counter() - t0 < 30


def test_7_oka_criterion(record_property):
    criterion(record_property, "7 Oka criterion")
    rng = np.random.default_rng(7)
    for n in (2, 3):
        rho = MixedPolynomial.from_terms(n, [(1, e, e) for e in np.eye(n, dtype=int).tolist()])
        for _ in range(100):
            assert oka_residual(rho, random_torus_point(rng, n)).residual <= 1e-12
    for _ in range(20):
        f, _, _ = random_holomorphic_wh(rng)
        z = random_torus_point(rng, 2)
        res = oka_residual(f, z)
        grad = math.hypot(*map(abs, res.a))
        assert grad > 0 and all(b == 0 for b in res.b)
        assert res.residual > 0 and res.residual == pytest.approx(grad, rel=1e-12)


def test_8_reach_target(record_property, fixture_poly):
    criterion(record_property, "8 reach_target round trip")
    rng = np.random.default_rng(8)
    instances = [params_4_2(t) for t in enumerate_4_2()]
    instances.append(recognize(fixture_poly("ex43")))
    for _ in range(100):
        p = instances[int(rng.integers(len(instances)))]
        g = build_g(p)
        rep = validate(p)
        z0 = random_torus_point(rng, 2)
        w = cmath.rect(10 ** rng.uniform(-3, 3), rng.uniform(-math.pi, math.pi))
        z = reach_target(g, p.P, rep.d_r, p.Q, rep.d_p, z0, w)
        assert abs(evaluate(g, z) - w) <= 1e-9 * abs(w)


def test_9_holomorphic_witness(record_property):
    criterion(record_property, "9 holomorphic zero witness")
    rng = np.random.default_rng(9)
    for _ in range(50):
        f, _, _ = random_holomorphic_wh(rng)
        z = holomorphic_zero_witness(f)
        assert all(abs(x) > 0 for x in z)
        assert abs(evaluate(f, z)) <= 1e-9 * term_magnitude_sum(f, z)


def _sweep_faces(points, limit=200):
    pts = np.array(points)
    W = np.array([(p1, s - p1) for s in range(2, limit + 1) for p1 in range(1, s) if math.gcd(p1, s - p1) == 1])
    vals = W @ pts.T
    mins = vals.min(axis=1, keepdims=True)
    hits = vals == mins
    return {frozenset(map(tuple, pts[row])) for row in hits}


def test_10_polyhedron_oracle(record_property):
    criterion(record_property, "10 compact faces vs weight sweep")
    t0 = time.perf_counter()
    rng = np.random.default_rng(10)
    for _ in range(200):
        nterms = int(rng.integers(1, 13))
        raw = []
        for _ in range(nterms):
            nu = tuple(int(x) for x in rng.integers(0, 11, size=2))
            mu = tuple(int(x) for x in rng.integers(0, 11, size=2))
            raw.append((int(rng.integers(1, 5)), nu, mu))
        f = MixedPolynomial.from_terms(2, raw)
        ours = {frozenset(fc.points) for fc in compact_faces_2d(f)}
        assert ours == _sweep_faces(support(f).points)
    assert time.perf_counter() - t0 < 60
