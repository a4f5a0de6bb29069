"""Euler identities, torus-action identities and the unimodular-gradient test
for mixed critical points."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ..errors import DimensionError, HomogeneityError
from ..gaussian import GaussianRational
from ..homogeneity import is_polar_wh, is_radially_wh
from ..mixedpoly import (
    MixedPolynomial,
    _is_exact,
    evaluate,
    term_magnitude_sum,
    wirtinger_dz,
    wirtinger_dzbar,
)
from ..polyhedron import as_weight


@dataclass(frozen=True)
class EulerCheck:
    kind: str  # "radial" | "polar"
    point: tuple
    lhs: object
    rhs: object
    exact: bool
    residual: float

    @property
    def holds(self) -> bool:
        if self.exact:
            return self.lhs == self.rhs
        scale = max(abs(complex(self.rhs)), 1.0)
        return self.residual <= 1e-9 * scale

    def to_dict(self) -> dict:
        def num(x):
            if isinstance(x, GaussianRational):
                return str(x)
            c = complex(x)
            return [c.real, c.imag]

        return {
            "kind": self.kind,
            "point": [num(x) for x in self.point],
            "lhs": num(self.lhs),
            "rhs": num(self.rhs),
            "exact": self.exact,
            "equal": self.holds,
            "residual": self.residual,
        }


def _euler(f: MixedPolynomial, W, d: int, z: Sequence, sign: int, kind: str) -> EulerCheck:
    if len(z) != f.nvars:
        raise DimensionError("point dimension mismatch")
    exact = all(_is_exact(x) for x in z)
    pts = tuple(GaussianRational.coerce(x) for x in z) if exact else tuple(complex(x) for x in z)
    lhs = GaussianRational(0) if exact else 0j
    for j in range(1, f.nvars + 1):
        w = W[j - 1]
        if not w:
            continue
        zj = pts[j - 1]
        hol = zj * evaluate(wirtinger_dz(f, j), pts)
        anti = zj.conjugate() * evaluate(wirtinger_dzbar(f, j), pts)
        lhs = lhs + (hol + anti if sign > 0 else hol - anti) * w
    rhs = evaluate(f, pts) * d
    residual = 0.0 if exact else abs(complex(lhs) - complex(rhs))
    if exact and lhs != rhs:
        residual = abs(complex(lhs - rhs))
    return EulerCheck(kind, pts, lhs, rhs, exact, residual)


def euler_radial(f: MixedPolynomial, P, d_r: int, z: Sequence) -> EulerCheck:
    """sum_j p_j (z_j df/dz_j + zbar_j df/dzbar_j) against d_r f(z)."""
    W = as_weight(P, "radial")
    if is_radially_wh(f, W) != d_r:
        raise HomogeneityError(f"f is not radially weighted homogeneous of degree {d_r} for {W.entries}")
    return _euler(f, W.entries, d_r, z, +1, "radial")


def euler_polar(f: MixedPolynomial, Q, d_p: int, z: Sequence) -> EulerCheck:
    """sum_j q_j (z_j df/dz_j - zbar_j df/dzbar_j) against d_p f(z)."""
    W = as_weight(Q, "polar")
    if is_polar_wh(f, W) != d_p:
        raise HomogeneityError(f"f is not polar weighted homogeneous of degree {d_p} for {W.entries}")
    return _euler(f, W.entries, d_p, z, -1, "polar")


def radial_action(P: Sequence[int], t: float, z: Sequence) -> tuple[complex, ...]:
    return tuple(complex(x) * t**p for p, x in zip(P, z))


def polar_action(Q: Sequence[int], theta: float, z: Sequence) -> tuple[complex, ...]:
    return tuple(complex(x) * cmath.exp(1j * q * theta) for q, x in zip(Q, z))


def radial_action_check(f: MixedPolynomial, P, d_r: int, t: float, z: Sequence) -> float:
    """|f(t o z) - t^d_r f(z)| relative to the term magnitude sum at t o z."""
    if t <= 0:
        raise ValueError("t must be positive")
    if t == 1:
        return 0.0
    W = as_weight(P, "radial")
    tz = radial_action(W.entries, t, z)
    diff = abs(evaluate(f, tz) - t**d_r * evaluate(f, [complex(x) for x in z]))
    scale = term_magnitude_sum(f, tz)
    return diff / scale if scale > 0 else diff


def polar_action_check(f: MixedPolynomial, Q, d_p: int, theta: float, z: Sequence) -> float:
    """|f(theta o z) - e^{i d_p theta} f(z)| relative to the term magnitude sum."""
    if theta == 0:
        return 0.0
    W = as_weight(Q, "polar")
    tz = polar_action(W.entries, theta, z)
    diff = abs(evaluate(f, tz) - cmath.exp(1j * d_p * theta) * evaluate(f, [complex(x) for x in z]))
    scale = term_magnitude_sum(f, z)
    return diff / scale if scale > 0 else diff


@dataclass(frozen=True)
class OkaResidual:
    point: tuple[complex, ...]
    a: tuple[complex, ...]  # conj of the holomorphic gradient
    b: tuple[complex, ...]  # antiholomorphic gradient
    residual: float
    best_alpha: complex | None

    @property
    def relative(self) -> float:
        scale = math.hypot(*map(abs, self.a)) + math.hypot(*map(abs, self.b))
        return self.residual / scale if scale > 0 else 0.0

    def to_dict(self) -> dict:
        return {
            "point": [[c.real, c.imag] for c in self.point],
            "residual": self.residual,
            "relative": self.relative,
            "best_alpha": None if self.best_alpha is None else [self.best_alpha.real, self.best_alpha.imag],
        }


def unimodular_residual(a: np.ndarray, b: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """min over |alpha| = 1 of ||a - alpha b|| along the last axis.

    The minimizer is alpha = s/|s| with s = sum a_j conj(b_j); the norm is
    evaluated directly (not through the expanded quadratic) so that exact
    proportionality gives rounding-level residuals.
    """
    s = np.sum(a * np.conj(b), axis=-1)
    mag = np.abs(s)
    alpha = np.where(mag > 0, s / np.where(mag > 0, mag, 1.0), 1.0 + 0j)
    res = np.linalg.norm(a - alpha[..., None] * b, axis=-1)
    return res, alpha


def oka_residual(f: MixedPolynomial, z: Sequence) -> OkaResidual:
    """Distance from the mixed-critical condition conj(df/dz) = alpha df/dzbar, |alpha| = 1.

    Zero exactly when z is a mixed critical point of f.
    """
    if len(z) != f.nvars:
        raise DimensionError("point dimension mismatch")
    pt = [complex(x) for x in z]
    n = f.nvars
    a = np.array([evaluate(wirtinger_dz(f, j), pt) for j in range(1, n + 1)], dtype=complex).conj()
    b = np.array([evaluate(wirtinger_dzbar(f, j), pt) for j in range(1, n + 1)], dtype=complex)
    res, alpha = unimodular_residual(a, b)
    s = np.sum(a * np.conj(b))
    return OkaResidual(
        tuple(pt),
        tuple(complex(x) for x in a),
        tuple(complex(x) for x in b),
        float(res),
        complex(alpha) if abs(s) > 0 else None,
    )
