"""Seeded numerical searches for torus zeros and mixed critical points.

A probe samples log-radii and angles on a scrambled Halton sequence, stops at
the first sample meeting the threshold, and otherwise polishes the best few
samples with a bounded least-squares solve.  The whole sample schedule is a
function of (seed, budget), so results are reproducible.

Outcomes are evidence only: ``none_found`` never proves emptiness.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import least_squares
from scipy.stats import qmc

from ..errors import DimensionError
from ..homogeneity import solve_radial_weights
from ..mixedpoly import MixedPolynomial, NumericGradient, NumericPoly

DEFAULT_TOL = 1e-9
DEFAULT_BUDGET = 4000
DEFAULT_RADII = (0.1, 10.0)
_CHUNK = 16384
_REFINE = 8
_SHORT_NFEV = 30
_LONG_NFEV = 300


@dataclass(frozen=True)
class ProbeResult:
    kind: str  # "zero" | "critical"
    outcome: str  # "counterexample" | "none_found"
    seed: int
    budget: int
    tol: float
    radii: tuple[float, float]
    samples: int  # objective evaluations on the sample schedule
    min_seen: float  # smallest relative residual seen anywhere
    point: tuple[complex, ...] | None = None
    value: complex | None = None  # f at the point
    residual: float | None = None  # relative residual at the point
    pinned: dict | None = field(default=None)  # radial normalization, if used

    @property
    def found(self) -> bool:
        return self.outcome == "counterexample"

    def to_dict(self) -> dict:
        out = {
            "kind": self.kind,
            "outcome": self.outcome,
            "seed": self.seed,
            "budget": self.budget,
            "tol": self.tol,
            "radii": list(self.radii),
            "samples": self.samples,
            "min_seen": self.min_seen,
            "normalization": self.pinned,
        }
        if self.found:
            out["point"] = [[c.real, c.imag] for c in self.point]
            out["value"] = [self.value.real, self.value.imag]
            out["residual"] = self.residual
        return out


class _Objective:
    """Relative residual vectors for a batch of points."""

    def __init__(self, f: MixedPolynomial, kind: str, zeros_only: bool):
        self.kind = kind
        self.zeros_only = zeros_only
        self.fn = NumericPoly(f)
        self.grad = NumericGradient(f) if kind == "critical" else None

    def vectors(self, Z: np.ndarray) -> np.ndarray:
        parts = []
        if self.kind == "zero" or self.zeros_only:
            mons = self.fn.monomials(Z)
            scale = np.abs(mons).sum(axis=-1)
            v = mons.sum(axis=-1) / np.where(scale > 0, scale, 1.0)
            parts.append(v[..., None])
        if self.kind == "critical":
            a, b = self.grad(Z)
            a = np.conj(a)
            s = np.sum(a * np.conj(b), axis=-1)
            mag = np.abs(s)
            alpha = np.where(mag > 0, s / np.where(mag > 0, mag, 1.0), 1.0 + 0j)
            gscale = np.linalg.norm(a, axis=-1) + np.linalg.norm(b, axis=-1)
            r = (a - alpha[..., None] * b) / np.where(gscale > 0, gscale, 1.0)[..., None]
            parts.append(r)
        v = np.concatenate(parts, axis=-1)
        return np.concatenate([v.real, v.imag], axis=-1)

    def norms(self, Z: np.ndarray) -> np.ndarray:
        return np.linalg.norm(self.vectors(Z), axis=-1)


def _pin_index(f: MixedPolynomial) -> tuple[int | None, tuple[int, ...] | None]:
    """First coordinate radius may be fixed to 1 when f is radially w.h."""
    if f.nvars < 2:
        return None, None
    sol = solve_radial_weights(f)
    if sol.witness is None or not sol.strict:
        return None, None
    return 0, sol.witness


def _probe(
    f: MixedPolynomial,
    kind: str,
    radii,
    budget: int,
    seed: int,
    tol: float,
    zeros_only: bool = False,
) -> ProbeResult:
    if f.is_zero():
        raise ValueError("cannot probe the zero polynomial")
    lo, hi = (float(radii[0]), float(radii[1]))
    if not (0 < lo <= hi) or not math.isfinite(hi):
        raise ValueError(f"empty or invalid radii region [{lo}, {hi}]")
    if budget < 1:
        raise ValueError("budget must be positive")
    n = f.nvars
    if n < 1:
        raise DimensionError("need at least one variable")
    obj = _Objective(f, kind, zeros_only)
    pin, weight = _pin_index(f)
    free = [j for j in range(n) if j != pin]
    nfree = len(free)
    dim = nfree + n
    llo, lhi = math.log(lo), math.log(hi)

    def to_points(X: np.ndarray) -> np.ndarray:
        logr = np.zeros(X.shape[:-1] + (n,))
        logr[..., free] = X[..., :nfree]
        theta = X[..., nfree:]
        return np.exp(logr + 1j * theta)

    sampler = qmc.Halton(d=dim, scramble=True, seed=seed)
    U = sampler.random(budget)
    X = np.empty_like(U)
    X[:, :nfree] = llo + (lhi - llo) * U[:, :nfree]
    X[:, nfree:] = 2 * math.pi * U[:, nfree:]

    vals = np.empty(budget)
    for s in range(0, budget, _CHUNK):
        vals[s : s + _CHUNK] = obj.norms(to_points(X[s : s + _CHUNK]))
    vals = np.where(np.isfinite(vals), vals, np.inf)
    pinned = None if pin is None else {"pinned_coordinate": pin + 1, "radial_weight": list(weight)}

    def result(z, r):
        val = complex(obj.fn(z[None, :])[0])
        return ProbeResult(
            kind, "counterexample", seed, budget, tol, (lo, hi), budget,
            float(min(r, vals.min())), tuple(complex(x) for x in z), val, float(r), pinned,
        )

    hits = np.flatnonzero(vals <= tol)
    if hits.size:
        i = int(hits[0])
        return result(to_points(X[i]), vals[i])

    best_seen = float(vals.min())
    found = None
    order = np.argsort(vals, kind="stable")[: min(_REFINE, budget)]
    # a degenerate radius interval leaves only the angles free
    active = np.arange(dim) if lhi > llo else np.arange(nfree, dim)
    lb = np.r_[np.full(nfree, llo), np.full(n, -np.inf)][active]
    ub = np.r_[np.full(nfree, lhi), np.full(n, np.inf)][active]
    def embed(Y, base):
        full = np.repeat(base[None, :], len(Y), axis=0)
        full[:, active] = Y
        return full

    def refine(base, nfev):
        def fun(y):
            return obj.vectors(to_points(embed(y[None, :], base)))[0]

        def jac(y):
            # central differences, all 2k points in one batched evaluation
            h = 1e-6 * np.maximum(1.0, np.abs(y))
            steps = np.diag(h)
            vals = obj.vectors(to_points(embed(np.vstack([y + steps, y - steps]), base)))
            k = len(y)
            return ((vals[:k] - vals[k:]) / (2 * h[:, None])).T

        sol = least_squares(fun, base[active], jac=jac, bounds=(lb, ub),
                            xtol=1e-15, ftol=1e-15, gtol=1e-15, max_nfev=nfev)
        r = float(np.linalg.norm(sol.fun))
        return embed(sol.x[None, :], base)[0], (r if math.isfinite(r) else math.inf)

    # short pass over every candidate, then a long polish of the best two
    stage = [refine(X[i].copy(), _SHORT_NFEV) for i in order]
    stage.sort(key=lambda xr: xr[1])
    stage = [refine(x, _LONG_NFEV) if k < 2 and r > tol else (x, r) for k, (x, r) in enumerate(stage)]
    for x, r in stage:
        best_seen = min(best_seen, r)
        if r <= tol and (found is None or r < found[1]):
            found = (to_points(x), r)
    if found is not None:
        return result(*found)
    return ProbeResult(kind, "none_found", seed, budget, tol, (lo, hi), budget, best_seen, pinned=pinned)


def zero_probe(
    f: MixedPolynomial,
    radii=DEFAULT_RADII,
    budget: int = DEFAULT_BUDGET,
    seed: int = 0,
    tol: float = DEFAULT_TOL,
) -> ProbeResult:
    """Search for z in the torus region with |f(z)| <= tol * sum |term(z)|."""
    return _probe(f, "zero", radii, budget, seed, tol)


def critical_probe(
    f: MixedPolynomial,
    radii=DEFAULT_RADII,
    budget: int = DEFAULT_BUDGET,
    seed: int = 0,
    tol: float = DEFAULT_TOL,
    zeros_only: bool = False,
) -> ProbeResult:
    """Search for mixed critical points (optionally only those on f = 0).

    The residual is min over |alpha| = 1 of ||conj(df/dz) - alpha df/dzbar||
    divided by the gradient scale ||df/dz|| + ||df/dzbar||; with
    ``zeros_only`` the relative value |f|/scale is stacked onto it.
    """
    return _probe(f, "critical", radii, budget, seed, tol, zeros_only)


__all__ = ["ProbeResult", "zero_probe", "critical_probe"]
