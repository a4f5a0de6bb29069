"""Exact integer linear algebra: kernels, Hermite normal form, small LP feasibility.

Everything works over ``int`` and ``Fraction``; matrices are lists of rows.
"""

from __future__ import annotations

from fractions import Fraction
from math import ceil, floor, gcd
from typing import Sequence

Vector = tuple[int, ...]


def primitive(v: Sequence[int]) -> Vector:
    """Divide an integer vector by the gcd of its entries (zero stays zero)."""
    g = 0
    for x in v:
        g = gcd(g, int(x))
    if g == 0:
        return tuple(int(x) for x in v)
    return tuple(int(x) // g for x in v)


def normalize_sign(v: Sequence[int]) -> Vector:
    """Flip v so that its first nonzero entry is positive."""
    for x in v:
        if x:
            return tuple(v) if x > 0 else tuple(-y for y in v)
    return tuple(v)


def dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))


def integer_kernel(rows: Sequence[Sequence[int]], n: int) -> list[Vector]:
    """A basis of {x in Z^n : A x = 0}, returned in Hermite normal form.

    Column operations reduce A to echelon form A U with U unimodular; the
    columns of U past the rank span the integer kernel.
    """
    A = [list(map(int, r)) for r in rows if any(r)]
    U = [[int(i == j) for j in range(n)] for i in range(n)]  # columns of U = U[*][c]

    def col_op(c_dst, c_src, k):
        # column c_dst -= k * column c_src
        for r in A:
            r[c_dst] -= k * r[c_src]
        for r in U:
            r[c_dst] -= k * r[c_src]

    def col_swap(c1, c2):
        for r in A:
            r[c1], r[c2] = r[c2], r[c1]
        for r in U:
            r[c1], r[c2] = r[c2], r[c1]

    rank = 0
    for row in A:
        if rank == n:
            break
        while True:
            nz = [c for c in range(rank, n) if row[c] != 0]
            if not nz:
                break
            piv = min(nz, key=lambda c: abs(row[c]))
            if piv != rank:
                col_swap(piv, rank)
            done = True
            for c in range(rank + 1, n):
                if row[c]:
                    col_op(c, rank, row[c] // row[rank])
                    if row[c]:
                        done = False
            if done:
                rank += 1
                break
    basis = [tuple(U[i][c] for i in range(n)) for c in range(rank, n)]
    return hermite_normal_form(basis)


def hermite_normal_form(rows: Sequence[Sequence[int]]) -> list[Vector]:
    """Row-style HNF of an integer matrix; zero rows are dropped.

    Pivots are positive and entries above a pivot are reduced into
    ``[0, pivot)``, so the result is a canonical basis of the row lattice.
    """
    M = [list(map(int, r)) for r in rows]
    if not M:
        return []
    ncols = len(M[0])
    r = 0
    pivots = []
    for c in range(ncols):
        while True:
            nz = [i for i in range(r, len(M)) if M[i][c] != 0]
            if not nz:
                break
            p = min(nz, key=lambda i: abs(M[i][c]))
            M[r], M[p] = M[p], M[r]
            done = True
            for i in range(r + 1, len(M)):
                if M[i][c]:
                    q = M[i][c] // M[r][c]
                    M[i] = [a - q * b for a, b in zip(M[i], M[r])]
                    if M[i][c]:
                        done = False
            if done:
                break
        if r < len(M) and M[r][c] != 0:
            if M[r][c] < 0:
                M[r] = [-a for a in M[r]]
            for i in range(r):
                q = M[i][c] // M[r][c]
                if q:
                    M[i] = [a - q * b for a, b in zip(M[i], M[r])]
            pivots.append(c)
            r += 1
            if r == len(M):
                break
    return [tuple(row) for row in M[:r]]


def rank(rows: Sequence[Sequence]) -> int:
    """Exact rank over Q."""
    M = [[Fraction(x) for x in r] for r in rows]
    if not M:
        return 0
    rk = 0
    ncols = len(M[0])
    for c in range(ncols):
        piv = next((i for i in range(rk, len(M)) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[rk], M[piv] = M[piv], M[rk]
        for i in range(rk + 1, len(M)):
            if M[i][c]:
                f = M[i][c] / M[rk][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[rk])]
        rk += 1
        if rk == len(M):
            break
    return rk


def affine_dimension(points: Sequence[Sequence[int]]) -> int:
    pts = list(points)
    if not pts:
        return -1
    base = pts[0]
    return rank([[a - b for a, b in zip(p, base)] for p in pts[1:]])


def in_lattice_span(v: Sequence[int], basis: Sequence[Sequence[int]]) -> bool:
    """Whether v lies in the rational span of basis (the kernel is saturated,
    so for kernel bases this is also integer membership)."""
    return rank(list(basis) + [list(v)]) == rank(basis)


# ---------------------------------------------------------------------------
# Fourier-Motzkin

def _pick(lo: Fraction | None, hi: Fraction | None) -> Fraction:
    """A simple value in [lo, hi]: an integer nearest zero when one fits."""
    if lo is None and hi is None:
        return Fraction(0)
    if lo is None:
        return Fraction(min(0, floor(hi)))
    if hi is None:
        return Fraction(max(0, ceil(lo)))
    cand = min(max(0, ceil(lo)), floor(hi)) if ceil(lo) <= floor(hi) else None
    if cand is not None and lo <= cand <= hi:
        return Fraction(cand)
    return (lo + hi) / 2


def solve_inequalities(G: Sequence[Sequence], h: Sequence) -> list[Fraction] | None:
    """Find x in Q^k with G x >= h, or return None if infeasible.

    Plain Fourier-Motzkin elimination followed by back-substitution; fine for
    the handful of variables (at most n) this package ever needs.
    """
    rows = [([Fraction(a) for a in g], Fraction(b)) for g, b in zip(G, h)]
    if not rows:
        return []
    k = len(rows[0][0])
    stages = []  # constraints present before eliminating variable j
    current = rows
    for j in range(k - 1, -1, -1):
        stages.append(current)
        pos = [(g, b) for g, b in current if g[j] > 0]
        neg = [(g, b) for g, b in current if g[j] < 0]
        zero = [(g, b) for g, b in current if g[j] == 0]
        new = list(zero)
        for gp, bp in pos:
            for gn, bn in neg:
                sp, sn = gp[j], -gn[j]
                g = [sn * a + sp * c for a, c in zip(gp, gn)]
                new.append((g, sn * bp + sp * bn))
        current = _dedupe(new)
    for g, b in current:
        # all variables eliminated: constraint reads 0 >= b
        if b > 0:
            return None
    x = [Fraction(0)] * k
    for j in range(k):
        cons = stages[k - 1 - j]
        lo = hi = None
        for g, b in cons:
            if g[j] == 0:
                continue
            rest = sum(g[i] * x[i] for i in range(j))
            bound = (b - rest) / g[j]
            if g[j] > 0:
                lo = bound if lo is None else max(lo, bound)
            else:
                hi = bound if hi is None else min(hi, bound)
        if lo is not None and hi is not None and lo > hi:
            return None
        x[j] = _pick(lo, hi)
    return x


def _dedupe(rows):
    seen = {}
    for g, b in rows:
        if not any(g):
            key = ("const",)
            if key not in seen or b > seen[key][1]:
                seen[key] = (g, b)
            continue
        # normalize by a positive multiple so duplicates collapse
        s = max(abs(a) for a in g)
        gn = tuple(a / s for a in g)
        bn = b / s
        if gn not in seen or bn > seen[gn][1]:
            seen[gn] = (list(gn), bn)
    return list(seen.values())


def find_in_cone(
    basis: Sequence[Sequence[int]],
    strict: Sequence[Sequence[int]] = (),
    nonneg: Sequence[Sequence[int]] = (),
) -> Vector | None:
    """Find an integer vector v in the span of ``basis`` with
    ``c . v > 0`` for every c in ``strict`` and ``c . v >= 0`` for every c in
    ``nonneg``.  Returns a primitive such v or None.
    """
    if not basis:
        return None
    n = len(basis[0])
    G, h = [], []
    for c in strict:
        G.append([dot(c, b) for b in basis])
        h.append(1)
    for c in nonneg:
        G.append([dot(c, b) for b in basis])
        h.append(0)
    x = solve_inequalities(G, h)
    if x is None:
        return None
    v = [sum(x[i] * basis[i][j] for i in range(len(basis))) for j in range(n)]
    den = 1
    for a in v:
        den = den * Fraction(a).denominator // gcd(den, Fraction(a).denominator)
    iv = primitive([int(a * den) for a in v])
    if not any(iv):
        return None
    return iv
