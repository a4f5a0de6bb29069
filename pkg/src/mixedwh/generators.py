"""Seeded random instances for tests and experiments."""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .gaussian import GaussianRational
from .mixedpoly import MixedPolynomial


def _coeff(rng: np.random.Generator, span: int = 5) -> GaussianRational:
    while True:
        re, im = (int(x) for x in rng.integers(-span, span + 1, size=2))
        if re or im:
            return GaussianRational(re, im)


def random_point(rng: np.random.Generator, n: int, den: int = 7) -> tuple[GaussianRational, ...]:
    """A Gaussian-rational point with every coordinate nonzero."""
    pts = []
    while len(pts) < n:
        re = Fraction(int(rng.integers(-3 * den, 3 * den + 1)), den)
        im = Fraction(int(rng.integers(-3 * den, 3 * den + 1)), den)
        if re or im:
            pts.append(GaussianRational(re, im))
    return tuple(pts)


def random_torus_point(rng: np.random.Generator, n: int, radii=(0.5, 2.0)) -> np.ndarray:
    r = np.exp(rng.uniform(np.log(radii[0]), np.log(radii[1]), size=n))
    return r * np.exp(1j * rng.uniform(0, 2 * np.pi, size=n))


def random_poly(rng: np.random.Generator, n: int, nterms: int, max_exp: int = 9) -> MixedPolynomial:
    raw = []
    for _ in range(nterms):
        nu = tuple(int(x) for x in rng.integers(0, max_exp + 1, size=n))
        mu = tuple(int(x) for x in rng.integers(0, max_exp + 1, size=n))
        raw.append((_coeff(rng), nu, mu))
    f = MixedPolynomial.from_terms(n, raw)
    return f if not f.is_zero() else MixedPolynomial.from_terms(n, [(1, (1,) * n, (0,) * n)])


def _collect(rng, n, nterms, max_exp, accept, first, batch=4096, rounds=8):
    """``first`` plus up to nterms - 1 further distinct (nu, mu) pairs drawn
    uniformly from the box and kept when ``accept(nu_array, mu_array)`` holds."""
    seen = {first: _coeff(rng)}
    for _ in range(rounds):
        if len(seen) >= nterms:
            break
        nu = rng.integers(0, max_exp + 1, size=(batch, n))
        mu = rng.integers(0, max_exp + 1, size=(batch, n))
        ok = np.flatnonzero(accept(nu, mu))
        for i in ok:
            key = (tuple(int(x) for x in nu[i]), tuple(int(x) for x in mu[i]))
            if key not in seen:
                seen[key] = _coeff(rng)
                if len(seen) == nterms:
                    break
    return MixedPolynomial.from_terms(n, [(c, nu, mu) for (nu, mu), c in seen.items()])


def random_radial_wh(
    rng: np.random.Generator, n: int, nterms: int, max_exp: int = 9, max_weight: int = 3
) -> tuple[MixedPolynomial, tuple[int, ...], int]:
    """(f, P, d_r) with f radially w.h. for a strictly positive P."""
    P = tuple(int(x) for x in rng.integers(1, max_weight + 1, size=n))
    nu0 = tuple(int(x) for x in rng.integers(0, max_exp + 1, size=n))
    mu0 = tuple(int(x) for x in rng.integers(0, max_exp + 1, size=n))
    d = sum(p * (a + b) for p, a, b in zip(P, nu0, mu0))
    if d == 0:
        nu0 = (1,) + nu0[1:]
        d = sum(p * (a + b) for p, a, b in zip(P, nu0, mu0))

    def accept(nu, mu):
        return (nu + mu) @ np.array(P) == d

    f = _collect(rng, n, nterms, max_exp, accept, (nu0, mu0))
    return f, P, d


def random_polar_wh(
    rng: np.random.Generator, n: int, nterms: int, max_exp: int = 9, max_weight: int = 3
) -> tuple[MixedPolynomial, tuple[int, ...], int]:
    """(f, Q, d_p) with f polar w.h. for a nonzero integer Q (entries may be negative)."""
    while True:
        Q = tuple(int(x) for x in rng.integers(-max_weight, max_weight + 1, size=n))
        if any(Q):
            break
    nu0 = tuple(int(x) for x in rng.integers(0, max_exp + 1, size=n))
    mu0 = tuple(int(x) for x in rng.integers(0, max_exp + 1, size=n))
    d = sum(q * (a - b) for q, a, b in zip(Q, nu0, mu0))

    def accept(nu, mu):
        return (nu - mu) @ np.array(Q) == d

    f = _collect(rng, n, nterms, max_exp, accept, (nu0, mu0))
    return f, Q, d


def random_holomorphic_wh(
    rng: np.random.Generator, max_weight: int = 4, max_m: int = 4
) -> tuple[MixedPolynomial, tuple[int, int], int]:
    """(f, P, d) with f holomorphic in two variables, P . nu = d on every
    term, at least two monomials."""
    while True:
        p1, p2 = (int(x) for x in rng.integers(1, max_weight + 1, size=2))
        if np.gcd(p1, p2) == 1:
            break
    m = int(rng.integers(1, max_m + 1))
    d = p1 * p2 * m
    slots = [(p2 * t, p1 * (m - t)) for t in range(m + 1)]
    k = int(rng.integers(2, len(slots) + 1))
    idx = sorted(rng.choice(len(slots), size=k, replace=False).tolist())
    raw = [(_coeff(rng), slots[i], (0, 0)) for i in idx]
    return MixedPolynomial.from_terms(2, raw), (p1, p2), d
