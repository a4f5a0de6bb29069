"""Mixed polynomials f(z, zbar) = sum c_{nu,mu} z^nu zbar^mu with exact coefficients.

Variables are 1-indexed in the text syntax and in every public function that
takes a variable index (``z1 .. zn``, ``zb1 .. zbn``).  Internally exponent
vectors are plain tuples indexed from 0.

Concrete syntax::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := '-' factor | atom ['^' INT]
    atom   := NUMBER | NUMBER 'i' | 'i' | 'z'INT | 'zb'INT | '(' expr ')'
    NUMBER := INT | INT '/' INT

e.g. ``(-3/2+1/2i)*z1^2*zb2 - z2*zb2^2``.  ``#`` starts a comment.
"""

from __future__ import annotations

import re
from math import lcm
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .errors import DimensionError, ParseError, ZeroPolynomialError
from .gaussian import GaussianRational, format_gaussian

Exponent = tuple[int, ...]


@dataclass(frozen=True)
class MixedTerm:
    coeff: GaussianRational
    nu: Exponent
    mu: Exponent

    def __post_init__(self):
        if not self.coeff:
            raise ValueError("term coefficient must be nonzero")
        if len(self.nu) != len(self.mu):
            raise DimensionError("nu and mu must have equal length")
        if any(e < 0 for e in self.nu) or any(e < 0 for e in self.mu):
            raise ValueError("negative exponent")

    @property
    def key(self) -> tuple[int, ...]:
        return self.nu + self.mu

    @property
    def point(self) -> Exponent:
        """nu + mu, the term's position in the radial Newton polyhedron."""
        return tuple(a + b for a, b in zip(self.nu, self.mu))

    @property
    def polar(self) -> Exponent:
        """nu - mu."""
        return tuple(a - b for a, b in zip(self.nu, self.mu))

    @property
    def degree(self) -> int:
        return sum(self.nu) + sum(self.mu)

    def monomial_text(self) -> str:
        parts = []
        for j, e in enumerate(self.nu, start=1):
            if e:
                parts.append(f"z{j}" if e == 1 else f"z{j}^{e}")
        for j, e in enumerate(self.mu, start=1):
            if e:
                parts.append(f"zb{j}" if e == 1 else f"zb{j}^{e}")
        return "*".join(parts)

    def __str__(self):
        return format_poly(MixedPolynomial(len(self.nu), (self,)))


def _canonical_terms(nvars: int, raw: Iterable[tuple]) -> tuple[MixedTerm, ...]:
    acc: dict[tuple[Exponent, Exponent], GaussianRational] = {}
    for coeff, nu, mu in raw:
        nu, mu = tuple(int(e) for e in nu), tuple(int(e) for e in mu)
        if len(nu) != nvars or len(mu) != nvars:
            raise DimensionError(f"exponent length {len(nu)} != nvars {nvars}")
        c = GaussianRational.coerce(coeff)
        acc[(nu, mu)] = acc.get((nu, mu), GaussianRational(0)) + c
    terms = [MixedTerm(c, nu, mu) for (nu, mu), c in acc.items() if c]
    terms.sort(key=lambda t: t.key)
    return tuple(terms)


@dataclass(frozen=True)
class MixedPolynomial:
    """Finite sum of mixed monomials in canonical form.

    Terms are merged, zero-free and sorted lexicographically on ``nu + mu``
    (the concatenation, not the sum).  Construct through :meth:`from_terms`
    unless the term tuple is already canonical.
    """

    nvars: int
    terms: tuple[MixedTerm, ...] = field(default=())

    def __post_init__(self):
        if self.nvars < 1:
            raise DimensionError("nvars must be positive")

    @classmethod
    def from_terms(cls, nvars: int, raw: Iterable[tuple]) -> MixedPolynomial:
        """Canonicalize an iterable of ``(coeff, nu, mu)`` triples."""
        return cls(nvars, _canonical_terms(nvars, raw))

    @classmethod
    def zero(cls, nvars: int) -> MixedPolynomial:
        return cls(nvars, ())

    @classmethod
    def constant(cls, nvars: int, c) -> MixedPolynomial:
        return cls.from_terms(nvars, [(c, (0,) * nvars, (0,) * nvars)])

    @classmethod
    def z(cls, nvars: int, j: int) -> MixedPolynomial:
        _check_index(j, nvars)
        e = tuple(int(i == j - 1) for i in range(nvars))
        return cls.from_terms(nvars, [(1, e, (0,) * nvars)])

    @classmethod
    def zb(cls, nvars: int, j: int) -> MixedPolynomial:
        _check_index(j, nvars)
        e = tuple(int(i == j - 1) for i in range(nvars))
        return cls.from_terms(nvars, [(1, (0,) * nvars, e)])

    def raw(self):
        return [(t.coeff, t.nu, t.mu) for t in self.terms]

    def is_zero(self) -> bool:
        return not self.terms

    def is_holomorphic(self) -> bool:
        return all(not any(t.mu) for t in self.terms)

    def has_constant_term(self) -> bool:
        return any(t.degree == 0 for t in self.terms)

    def coefficient(self, nu: Sequence[int], mu: Sequence[int]) -> GaussianRational:
        for t in self.terms:
            if t.nu == tuple(nu) and t.mu == tuple(mu):
                return t.coeff
        return GaussianRational(0)

    def _check_same(self, other: MixedPolynomial):
        if self.nvars != other.nvars:
            raise DimensionError(f"nvars mismatch: {self.nvars} vs {other.nvars}")

    def __add__(self, other):
        if not isinstance(other, MixedPolynomial):
            other = MixedPolynomial.constant(self.nvars, other)
        self._check_same(other)
        return MixedPolynomial.from_terms(self.nvars, self.raw() + other.raw())

    __radd__ = __add__

    def __neg__(self):
        return MixedPolynomial(self.nvars, tuple(MixedTerm(-t.coeff, t.nu, t.mu) for t in self.terms))

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, MixedPolynomial):
            c = GaussianRational.coerce(other)
            return MixedPolynomial.from_terms(self.nvars, [(t.coeff * c, t.nu, t.mu) for t in self.terms])
        self._check_same(other)
        raw = []
        for s in self.terms:
            for t in other.terms:
                raw.append((
                    s.coeff * t.coeff,
                    tuple(a + b for a, b in zip(s.nu, t.nu)),
                    tuple(a + b for a, b in zip(s.mu, t.mu)),
                ))
        return MixedPolynomial.from_terms(self.nvars, raw)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ParseError("negative exponent")
        result = MixedPolynomial.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> MixedPolynomial:
        """The polynomial whose value is conj(f(z))."""
        return MixedPolynomial.from_terms(
            self.nvars, [(t.coeff.conjugate(), t.mu, t.nu) for t in self.terms]
        )

    def __str__(self):
        return format_poly(self)

    def __call__(self, z):
        return evaluate(self, z)


def _check_index(j: int, nvars: int):
    if not 1 <= j <= nvars:
        raise DimensionError(f"variable index {j} out of range 1..{nvars}")


# ---------------------------------------------------------------------------
# parsing and formatting

_TOKEN = re.compile(
    r"\s*(?:"
    r"(?P<num>\d+(?:/\d+)?)(?P<imag>i(?![A-Za-z0-9_]))?"
    r"|(?P<var>zb|z)(?P<idx>\d+)"
    r"|(?P<unit>i)(?![A-Za-z0-9_])"
    r"|(?P<op>[-+*^()])"
    r")"
)


def _tokenize(text: str):
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        start = pos
        if m.group("num") is not None:
            num = m.group("num")
            if "/" in num:
                p, q = num.split("/")
                if int(q) == 0:
                    raise ParseError("zero denominator", start)
                val = Fraction(int(p), int(q))
            else:
                val = Fraction(int(num))
            kind = "imag" if m.group("imag") else "num"
            tokens.append((kind, val, start))
        elif m.group("var") is not None:
            tokens.append((m.group("var"), int(m.group("idx")), start))
        elif m.group("unit") is not None:
            tokens.append(("imag", Fraction(1), start))
        else:
            tokens.append((m.group("op"), None, start))
        pos = m.end()
    tokens.append(("end", None, n))
    return tokens


class _Parser:
    def __init__(self, text: str, nvars: int):
        self.tokens = _tokenize(text)
        self.i = 0
        self.nvars = nvars

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind=None):
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[0]!r}", tok[2])
        self.i += 1
        return tok

    def expr(self) -> MixedPolynomial:
        sign = 1
        if self.peek()[0] in ("+", "-"):
            sign = -1 if self.take()[0] == "-" else 1
        acc = self.term() * sign
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self) -> MixedPolynomial:
        acc = self.factor()
        while self.peek()[0] == "*":
            self.take()
            acc = acc * self.factor()
        return acc

    def factor(self) -> MixedPolynomial:
        if self.peek()[0] == "-":
            self.take()
            return -self.factor()
        base = self.atom()
        if self.peek()[0] == "^":
            self.take()
            tok = self.peek()
            if tok[0] == "-":
                raise ParseError("negative exponent", tok[2])
            kind, val, pos = self.take()
            if kind != "num" or val.denominator != 1:
                raise ParseError("exponent must be a nonnegative integer", pos)
            base = base ** int(val)
        return base

    def atom(self) -> MixedPolynomial:
        kind, val, pos = self.take()
        n = self.nvars
        if kind == "num":
            return MixedPolynomial.constant(n, val)
        if kind == "imag":
            return MixedPolynomial.constant(n, GaussianRational(0, val))
        if kind in ("z", "zb"):
            if val < 1 or val > n:
                raise ParseError(f"variable index {val} outside 1..{n}", pos)
            return MixedPolynomial.z(n, val) if kind == "z" else MixedPolynomial.zb(n, val)
        if kind == "(":
            inner = self.expr()
            self.take(")")
            return inner
        raise ParseError(f"unexpected token {kind!r}", pos)


def _strip_comments(text: str) -> str:
    return "\n".join(line.split("#", 1)[0] for line in text.splitlines())


def infer_nvars(text: str) -> int:
    idx = [int(m.group(2)) for m in re.finditer(r"(zb|z)(\d+)", _strip_comments(text))]
    return max(idx, default=1)


def parse(text: str, nvars: int | None = None, germ: bool = False) -> MixedPolynomial:
    """Parse polynomial text into canonical form.

    ``nvars`` defaults to the largest variable index present.  With
    ``germ=True`` a nonzero constant term is rejected since germs vanish at 0.
    """
    body = _strip_comments(text)
    if nvars is None:
        nvars = infer_nvars(body)
    if nvars < 1:
        raise DimensionError("nvars must be positive")
    if not body.strip():
        raise ParseError("empty input", 0)
    p = _Parser(body, nvars)
    poly = p.expr()
    tok = p.peek()
    if tok[0] != "end":
        raise ParseError(f"unexpected trailing {tok[0]!r}", tok[2])
    if germ and poly.has_constant_term():
        raise ParseError("constant term not allowed for a germ (f(0) must be 0)", 0)
    return poly


def load(path: str | Path, nvars: int | None = None, germ: bool = False) -> MixedPolynomial:
    """Read one polynomial from a UTF-8 file."""
    return parse(Path(path).read_text(encoding="utf-8"), nvars=nvars, germ=germ)


def format_poly(f: MixedPolynomial) -> str:
    if not f.terms:
        return "0"
    out = []
    for k, t in enumerate(f.terms):
        c = t.coeff
        mono = t.monomial_text()
        if c.is_real():
            neg = c.re < 0
            mag = format_gaussian(GaussianRational(abs(c.re)))
            body = mono if (mag == "1" and mono) else (f"{mag}*{mono}" if mono else mag)
        else:
            neg = False
            ctext = f"({format_gaussian(c)})"
            body = f"{ctext}*{mono}" if mono else ctext
        if k == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


# ---------------------------------------------------------------------------
# evaluation and calculus

def _is_exact(value) -> bool:
    return isinstance(value, (GaussianRational, int, Fraction))


def _gmul(x, y):
    return (x[0] * y[0] - x[1] * y[1], x[0] * y[1] + x[1] * y[0])


def _evaluate_exact(f: MixedPolynomial, zs: list[GaussianRational]) -> GaussianRational:
    # z_j = g_j / D_j with g_j a Gaussian integer; everything is summed over
    # the common denominator prod D_j^(max exponent) to avoid Fraction gcds
    n = f.nvars
    if not f.terms:
        return GaussianRational(0)
    g, D = [], []
    for x in zs:
        den = lcm(x.re.denominator, x.im.denominator)
        g.append((int(x.re * den), int(x.im * den)))
        D.append(den)
    top = [max(t.point[j] for t in f.terms) for j in range(n)]
    pw = [[(1, 0)] for _ in range(n)]
    pwc = [[(1, 0)] for _ in range(n)]
    for j in range(n):
        hi = max(max(t.nu[j] for t in f.terms), max(t.mu[j] for t in f.terms))
        gc = (g[j][0], -g[j][1])
        for _ in range(hi):
            pw[j].append(_gmul(pw[j][-1], g[j]))
            pwc[j].append(_gmul(pwc[j][-1], gc))
    cden = 1
    for t in f.terms:
        cden = lcm(cden, t.coeff.re.denominator, t.coeff.im.denominator)
    re_sum = im_sum = 0
    for t in f.terms:
        v = (int(t.coeff.re * cden), int(t.coeff.im * cden))
        scale = 1
        for j in range(n):
            if t.nu[j]:
                v = _gmul(v, pw[j][t.nu[j]])
            if t.mu[j]:
                v = _gmul(v, pwc[j][t.mu[j]])
            scale *= D[j] ** (top[j] - t.point[j])
        re_sum += v[0] * scale
        im_sum += v[1] * scale
    L = cden
    for j in range(n):
        L *= D[j] ** top[j]
    return GaussianRational(Fraction(re_sum, L), Fraction(im_sum, L))


def evaluate(f: MixedPolynomial, z: Sequence):
    """f at the point z.

    Exact (a :class:`GaussianRational`) when every coordinate is an int,
    Fraction or GaussianRational; a Python ``complex`` otherwise.
    """
    if len(z) != f.nvars:
        raise DimensionError(f"point has {len(z)} coordinates, polynomial has {f.nvars} variables")
    if all(_is_exact(x) for x in z):
        return _evaluate_exact(f, [GaussianRational.coerce(x) for x in z])
    zc = [complex(x) for x in z]
    zbc = [x.conjugate() for x in zc]
    total = 0j
    for t in f.terms:
        v = complex(t.coeff)
        for j in range(f.nvars):
            if t.nu[j]:
                v *= zc[j] ** t.nu[j]
            if t.mu[j]:
                v *= zbc[j] ** t.mu[j]
        total += v
    return total


def term_magnitude_sum(f: MixedPolynomial, z: Sequence) -> float:
    """sum over terms of |c| |z|^(nu+mu); the natural scale of |f(z)|."""
    r = [abs(complex(x)) for x in z]
    total = 0.0
    for t in f.terms:
        v = abs(complex(t.coeff))
        for j, e in enumerate(t.point):
            if e:
                v *= r[j] ** e
        total += v
    return total


def wirtinger_dz(f: MixedPolynomial, j: int) -> MixedPolynomial:
    """d f / d z_j, treating zbar as independent (1-indexed j)."""
    _check_index(j, f.nvars)
    k = j - 1
    raw = []
    for t in f.terms:
        e = t.nu[k]
        if e:
            nu = t.nu[:k] + (e - 1,) + t.nu[k + 1:]
            raw.append((t.coeff * e, nu, t.mu))
    return MixedPolynomial.from_terms(f.nvars, raw)


def wirtinger_dzbar(f: MixedPolynomial, j: int) -> MixedPolynomial:
    """d f / d zbar_j (1-indexed j)."""
    _check_index(j, f.nvars)
    k = j - 1
    raw = []
    for t in f.terms:
        e = t.mu[k]
        if e:
            mu = t.mu[:k] + (e - 1,) + t.mu[k + 1:]
            raw.append((t.coeff * e, t.nu, mu))
    return MixedPolynomial.from_terms(f.nvars, raw)


def restrict(f: MixedPolynomial, I: Iterable[int]) -> MixedPolynomial:
    """f restricted to the coordinate subspace {z_j = 0 for j not in I}."""
    keep = set(I)
    if not keep:
        raise ValueError("restriction set must be nonempty")
    for j in keep:
        _check_index(j, f.nvars)
    drop = [j - 1 for j in range(1, f.nvars + 1) if j not in keep]
    terms = tuple(t for t in f.terms if all(t.nu[k] == 0 and t.mu[k] == 0 for k in drop))
    return MixedPolynomial(f.nvars, terms)


@dataclass(frozen=True)
class Convenience:
    convenient: bool
    witnesses: tuple[MixedTerm | None, ...]  # per axis, 0-indexed

    def __bool__(self):
        return self.convenient


def is_convenient(f: MixedPolynomial) -> Convenience:
    """Check for an axis-pure term c z_i^a zbar_i^b (a + b > 0) on every axis."""
    if f.is_zero():
        raise ZeroPolynomialError("convenience is undefined for the zero polynomial")
    witnesses = []
    for i in range(f.nvars):
        found = None
        for t in f.terms:
            others_zero = all(t.nu[k] == 0 and t.mu[k] == 0 for k in range(f.nvars) if k != i)
            if others_zero and t.nu[i] + t.mu[i] > 0:
                found = t
                break
        witnesses.append(found)
    return Convenience(all(w is not None for w in witnesses), tuple(witnesses))


# ---------------------------------------------------------------------------
# vectorized floating evaluation

class NumericPoly:
    """Float compilation of a mixed polynomial for batched evaluation.

    ``__call__`` accepts an array of shape ``(..., n)`` of complex points.
    """

    def __init__(self, f: MixedPolynomial):
        self.nvars = f.nvars
        self.coeffs = np.array([complex(t.coeff) for t in f.terms], dtype=complex)
        self.nu = np.array([t.nu for t in f.terms], dtype=np.int64).reshape(-1, f.nvars)
        self.mu = np.array([t.mu for t in f.terms], dtype=np.int64).reshape(-1, f.nvars)

    def monomials(self, Z: np.ndarray) -> np.ndarray:
        Z = np.asarray(Z, dtype=complex)
        if Z.shape[-1] != self.nvars:
            raise DimensionError("point dimension mismatch")
        Zt = Z[..., None, :]
        vals = np.prod(Zt**self.nu * np.conj(Zt) ** self.mu, axis=-1)
        return vals * self.coeffs

    def __call__(self, Z: np.ndarray) -> np.ndarray:
        if not len(self.coeffs):
            return np.zeros(np.asarray(Z).shape[:-1], dtype=complex)
        return self.monomials(Z).sum(axis=-1)

    def scale(self, Z: np.ndarray) -> np.ndarray:
        if not len(self.coeffs):
            return np.zeros(np.asarray(Z).shape[:-1])
        return np.abs(self.monomials(Z)).sum(axis=-1)


class NumericGradient:
    """Batched holomorphic and antiholomorphic gradients of f."""

    def __init__(self, f: MixedPolynomial):
        n = f.nvars
        self.nvars = n
        self.dz = [NumericPoly(wirtinger_dz(f, j)) for j in range(1, n + 1)]
        self.dzb = [NumericPoly(wirtinger_dzbar(f, j)) for j in range(1, n + 1)]

    def __call__(self, Z: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        a = np.stack([d(Z) for d in self.dz], axis=-1)
        b = np.stack([d(Z) for d in self.dzb], axis=-1)
        return a, b
