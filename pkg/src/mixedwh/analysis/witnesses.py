"""Constructive points: hitting a target value along the torus orbits, and a
torus zero of a holomorphic weighted homogeneous polynomial in two variables."""

from __future__ import annotations

import cmath
import math
from typing import Sequence

import numpy as np

from ..errors import DimensionError, HomogeneityError
from ..homogeneity import is_polar_wh, is_radially_wh, solve_radial_weights
from ..mixedpoly import MixedPolynomial, evaluate, term_magnitude_sum
from .identities import polar_action, radial_action


def reach_target(
    f: MixedPolynomial, P, d_r: int, Q, d_p: int, z0: Sequence, w: complex
) -> tuple[complex, ...]:
    """A point z with f(z) = w, obtained from f(t o (theta o z0)) = t^d_r e^{i d_p theta} f(z0).

    t = (|w|/|w0|)^(1/d_r) and theta = (arg w - arg w0)/d_p with w0 = f(z0).
    """
    if d_r <= 0:
        raise HomogeneityError("radial degree must be positive")
    if d_p == 0:
        raise HomogeneityError("polar degree 0: the argument of f cannot be moved")
    if is_radially_wh(f, P) != d_r:
        raise HomogeneityError(f"f is not radially weighted homogeneous of degree {d_r} for {tuple(P)}")
    if is_polar_wh(f, Q) != d_p:
        raise HomogeneityError(f"f is not polar weighted homogeneous of degree {d_p} for {tuple(Q)}")
    w = complex(w)
    if w == 0:
        raise ValueError("target must be nonzero")
    z0 = [complex(x) for x in z0]
    w0 = complex(evaluate(f, z0))
    if w0 == 0:
        raise ValueError("witness value f(z0) is zero")
    t = (abs(w) / abs(w0)) ** (1.0 / d_r)
    theta = (cmath.phase(w) - cmath.phase(w0)) / d_p
    return radial_action(tuple(P), t, polar_action(tuple(Q), theta, z0))


def holomorphic_zero_witness(f: MixedPolynomial, tol: float = 1e-9) -> tuple[complex, complex]:
    """A zero (z1, 1) of f in C*^2 for holomorphic weighted homogeneous f.

    With z2 = 1 and the factor z1^min removed, f becomes a one-variable
    polynomial with nonzero constant term; its roots are nonzero.  Among the
    roots meeting the tolerance the one with the largest real part is chosen.
    """
    if f.nvars != 2:
        raise DimensionError(f"holomorphic zero witness needs 2 variables, got {f.nvars}")
    if not f.is_holomorphic():
        raise ValueError("f is not holomorphic")
    if len(f.terms) < 2:
        raise ValueError("a single monomial has no zero in the torus")
    sol = solve_radial_weights(f)
    if sol.witness is None or not sol.strict:
        raise HomogeneityError("f is not weighted homogeneous for a strictly positive weight")
    low = min(t.nu[0] for t in f.terms)
    deg = max(t.nu[0] for t in f.terms) - low
    coeffs = np.zeros(deg + 1, dtype=complex)  # ascending powers of z1
    for t in f.terms:
        coeffs[t.nu[0] - low] += complex(t.coeff)
    roots = np.roots(coeffs[::-1])
    p = np.polynomial.Polynomial(coeffs)
    dp = p.deriv()
    polished = []
    for r in roots:
        for _ in range(8):
            d = dp(r)
            if d == 0:
                break
            step = p(r) / d
            r = r - step
            if abs(step) <= 1e-16 * max(abs(r), 1.0):
                break
        polished.append(complex(r))
    best = None
    for r in sorted(polished, key=lambda c: (-round(c.real, 12), round(c.imag, 12))):
        z = (r, 1 + 0j)
        scale = term_magnitude_sum(f, z)
        rel = abs(evaluate(f, z)) / scale if scale > 0 else math.inf
        if rel <= tol and r != 0:
            return z
        if best is None or rel < best[1]:
            best = (z, rel)
    raise ArithmeticError(f"root polishing reached only relative residual {best[1]:.3g}")
