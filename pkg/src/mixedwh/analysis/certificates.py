"""Exact certificates that a face function has no zero on the torus C*^n,
or that every torus point is mixed critical."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..gaussian import GaussianRational, I
from ..mixedpoly import MixedPolynomial

_ROTATIONS = (GaussianRational(1), I, GaussianRational(-1), -I)


@dataclass(frozen=True)
class Certificate:
    kind: str  # "monomial" | "family" | "definite_real_part" | "real_valued"
    statement: str
    detail: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"kind": self.kind, "statement": self.statement, "detail": self.detail}


def monomial_certificate(g: MixedPolynomial) -> Certificate | None:
    if len(g.terms) != 1:
        return None
    return Certificate("monomial", "a single monomial does not vanish on the torus", {"term": str(g)})


def _strip_common(g: MixedPolynomial):
    n = g.nvars
    lo_nu = tuple(min(t.nu[j] for t in g.terms) for j in range(n))
    lo_mu = tuple(min(t.mu[j] for t in g.terms) for j in range(n))
    raw = {}
    for t in g.terms:
        nu = tuple(a - b for a, b in zip(t.nu, lo_nu))
        mu = tuple(a - b for a, b in zip(t.mu, lo_mu))
        raw[(nu, mu)] = t.coeff
    return lo_nu, lo_mu, raw


def definite_real_part_certificate(g: MixedPolynomial) -> Certificate | None:
    """Certify g != 0 on C*^n when some rotation lam*g, after dividing out the
    common monomial factor, has a real part that is a positive combination of
    squared moduli |z^nu|^2.

    That happens when every off-diagonal term c z^nu zbar^mu (nu != mu) is
    matched by c' z^mu zbar^nu with lam c' = -conj(lam c), so the pair is
    purely imaginary, and the diagonal coefficients have Re(lam c) >= 0 with at
    least one strictly positive.
    """
    if g.is_zero() or len(g.terms) < 2:
        return None
    lo_nu, lo_mu, raw = _strip_common(g)
    for lam in _ROTATIONS:
        positive = False
        ok = True
        for (nu, mu), c in raw.items():
            lc = lam * c
            if nu == mu:
                if lc.re < 0:
                    ok = False
                    break
                positive = positive or lc.re > 0
                continue
            partner = raw.get((mu, nu))
            if partner is None or lam * partner != -lc.conjugate():
                ok = False
                break
        if ok and positive:
            return Certificate(
                "definite_real_part",
                "after removing the common monomial, Re(lam * g) is a positive sum of squared moduli",
                {
                    "lambda": str(lam),
                    "common_factor": {"nu": list(lo_nu), "mu": list(lo_mu)},
                },
            )
    return None


def real_valued_certificate(g: MixedPolynomial) -> Certificate | None:
    """If lam*g is real valued for some unimodular lam, the real differential of
    g has rank <= 1 everywhere, so every point is mixed critical.

    lam*g is real valued iff conj(g) = kappa*g with kappa = lam^2; kappa is read
    off one coefficient and checked on all of them exactly.
    """
    if g.is_zero():
        return None
    coeff = {(t.nu, t.mu): t.coeff for t in g.terms}
    kappa = None
    for (nu, mu), c in coeff.items():
        partner = coeff.get((mu, nu))
        if partner is None:
            return None
        k = partner.conjugate() / c
        if kappa is None:
            kappa = k
        elif k != kappa:
            return None
    if kappa.norm() != 1:
        return None
    return Certificate(
        "real_valued",
        "lam * g is real valued for a unimodular lam, so every point is a mixed critical point",
        {"lambda_squared": str(kappa)},
    )
