"""Sparse polynomials in x_1..x_n, graded bases, and vectors of the Verma module Sym(h*) (x) tau.

Variables are 0-indexed in the Python API (``x_0`` is written ``x1`` in text).
Coefficients are raw elements of a coefficient field (see :mod:`cherednik.fields`).

Text grammar (used by the CLI and the result store)::

    poly   := term (('+'|'-') term)*
    term   := coeff ('*' var '^' exp)*
    var    := 'x' index            (1-based)
    vector := poly ' (*) e1' ' + ' poly ' (*) e2' ...
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Iterable, Sequence

from .fields import FieldError, FieldMismatch, InvalidInput


class ArityMismatch(ValueError):
    pass


class InexactDivision(FieldError):
    """Raised when a supposedly exact division by a root leaves a remainder."""


class DegreeMismatch(ValueError):
    pass


Exps = tuple  # exponent vector


@lru_cache(maxsize=None)
def enumerate_monomials(n: int, d: int) -> tuple[Exps, ...]:
    """Exponent vectors of degree ``d`` in ``n`` variables, lexicographically decreasing."""
    if n == 0:
        return ((),) if d == 0 else ()
    if n == 1:
        return ((d,),)
    out = []
    for a in range(d, -1, -1):
        for rest in enumerate_monomials(n - 1, d - a):
            out.append((a,) + rest)
    return tuple(out)


def _grlex_key(e):
    return (-sum(e), tuple(-x for x in e))


class Poly:
    """A polynomial with raw coefficients in ``K``; zero coefficients are never stored."""

    __slots__ = ("K", "n", "terms")

    def __init__(self, K, n: int, terms: dict | None = None, *, clean: bool = False):
        self.K = K
        self.n = n
        if terms is None:
            terms = {}
        elif not clean:
            terms = {tuple(e): c for e, c in terms.items() if not K.is_zero(c)}
            for e in terms:
                if len(e) != n:
                    raise ArityMismatch(f"exponent {e} has wrong length for n={n}")
        self.terms = terms

    # -- constructors
    @classmethod
    def zero(cls, K, n):
        return cls(K, n, {}, clean=True)

    @classmethod
    def const(cls, K, n, a):
        return cls(K, n, {(0,) * n: a})

    @classmethod
    def var(cls, K, n, i):
        e = [0] * n
        e[i] = 1
        return cls(K, n, {tuple(e): K.one}, clean=True)

    @classmethod
    def monomial(cls, K, exps, coeff=None):
        coeff = K.one if coeff is None else coeff
        return cls(K, len(exps), {tuple(exps): coeff})

    @classmethod
    def linear(cls, K, coeffs):
        n = len(coeffs)
        terms = {}
        for i, a in enumerate(coeffs):
            e = [0] * n
            e[i] = 1
            terms[tuple(e)] = a
        return cls(K, n, terms)

    # -- queries
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def degrees(self):
        return sorted({sum(e) for e in self.terms})

    def is_homogeneous(self):
        return len(self.degrees()) <= 1

    def coeff(self, exps):
        return self.terms.get(tuple(exps), self.K.zero)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]))

    def _check(self, o):
        if not isinstance(o, Poly):
            return False
        if o.K != self.K:
            raise FieldMismatch(f"{self.K!r} vs {o.K!r}")
        if o.n != self.n:
            raise ArityMismatch(f"{self.n} vs {o.n} variables")
        return True

    def __eq__(self, o):
        if not isinstance(o, Poly):
            return NotImplemented
        self._check(o)
        if self.terms.keys() != o.terms.keys():
            return False
        return all(self.K.eq(c, o.terms[e]) for e, c in self.terms.items())

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- arithmetic
    def __add__(self, o):
        if not self._check(o):
            return NotImplemented
        K = self.K
        out = dict(self.terms)
        for e, c in o.terms.items():
            if e in out:
                s = K.add(out[e], c)
                if K.is_zero(s):
                    del out[e]
                else:
                    out[e] = s
            else:
                out[e] = c
        return Poly(K, self.n, out, clean=True)

    def __neg__(self):
        K = self.K
        return Poly(K, self.n, {e: K.neg(c) for e, c in self.terms.items()}, clean=True)

    def __sub__(self, o):
        if not self._check(o):
            return NotImplemented
        return self + (-o)

    def __mul__(self, o):
        if not self._check(o):
            return NotImplemented
        K = self.K
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = K.mul(c1, c2)
                out[e] = K.add(out[e], v) if e in out else v
        return Poly(K, self.n, {e: c for e, c in out.items() if not K.is_zero(c)}, clean=True)

    def __pow__(self, k: int):
        result = Poly.const(self.K, self.n, self.K.one)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, a):
        K = self.K
        if K.is_zero(a):
            return Poly.zero(K, self.n)
        return Poly(K, self.n, {e: K.mul(c, a) for e, c in self.terms.items()}, clean=True)

    def mul_monomial(self, exps, a=None):
        K = self.K
        out = {}
        for e, c in self.terms.items():
            v = c if a is None else K.mul(c, a)
            if not K.is_zero(v):
                out[tuple(x + y for x, y in zip(e, exps))] = v
        return Poly(K, self.n, out, clean=True)

    def graded_component(self, d):
        return Poly(self.K, self.n, {e: c for e, c in self.terms.items() if sum(e) == d}, clean=True)

    def map_coeffs(self, fn, K2):
        return Poly(K2, self.n, {e: fn(c) for e, c in self.terms.items()})

    # -- text
    def to_str(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            s = self.K.to_str(c)
            for i, a in enumerate(e):
                if a:
                    s += f"*x{i + 1}^{a}"
            parts.append(s)
        return " + ".join(parts)

    def __repr__(self):
        return f"Poly({self.to_str()})"

    __str__ = to_str


# ---------------------------------------------------------------------------
# calculus and group actions

def partial(f: Poly, k: int) -> Poly:
    """Formal derivative in ``x_k`` (exponents multiply in characteristic p)."""
    if not 0 <= k < f.n:
        raise InvalidInput(f"variable index {k} out of range for n={f.n}")
    K = f.K
    out = {}
    for e, c in f.terms.items():
        a = e[k]
        if a % K.characteristic == 0:
            continue
        v = K.mul(c, K.from_int(a))
        ne = e[:k] + (a - 1,) + e[k + 1:]
        out[ne] = v
    return Poly(K, f.n, out, clean=True)


def monomial_map(matrix) -> list | None:
    """``[(sigma_j, lambda_j)]`` if ``x_j -> lambda_j x_{sigma_j}`` for every ``j``, else None.

    ``matrix[i][j]`` is the coefficient of ``x_i`` in the image of ``x_j``.
    """
    n = len(matrix)
    out = []
    for j in range(n):
        nz = [i for i in range(n) if matrix[i][j] != 0 and not _is_zero_raw(matrix[i][j])]
        if len(nz) != 1:
            return None
        out.append((nz[0], matrix[nz[0]][j]))
    return out


def _is_zero_raw(a):
    try:
        return a.is_zero()
    except AttributeError:
        return a == 0


def substitute(f: Poly, matrix, K=None) -> Poly:
    """Apply the linear substitution ``x_j -> sum_i matrix[i][j] x_i`` (entries raw in ``f.K``)."""
    K = f.K if K is None else K
    n = f.n
    mm = monomial_map(matrix)
    if mm is not None:
        out = {}
        for e, c in f.terms.items():
            ne = [0] * n
            coef = c
            for j, a in enumerate(e):
                if a:
                    i, lam = mm[j]
                    ne[i] += a
                    coef = K.mul(coef, K.pow(lam, a))
            ne = tuple(ne)
            out[ne] = K.add(out[ne], coef) if ne in out else coef
        return Poly(K, n, {e: c for e, c in out.items() if not K.is_zero(c)}, clean=True)
    images = [Poly.linear(K, [matrix[i][j] for i in range(n)]) for j in range(n)]
    powers: dict = {}
    acc = Poly.zero(K, n)
    for e, c in f.terms.items():
        t = Poly.const(K, n, c)
        for j, a in enumerate(e):
            if a:
                key = (j, a)
                if key not in powers:
                    powers[key] = images[j] ** a
                t = t * powers[key]
        acc = acc + t
    return acc


def divide_by_linear(g: Poly, alpha: Sequence) -> Poly:
    """Exact quotient ``g / alpha`` for a linear form with raw coefficients ``alpha``."""
    K = g.K
    n = g.n
    lead = next((i for i, a in enumerate(alpha) if not K.is_zero(a)), None)
    if lead is None:
        raise InexactDivision("division by the zero linear form")
    inv = K.inv(alpha[lead])
    rem = dict(g.terms)
    quo: dict = {}
    while rem:
        top = max(e[lead] for e in rem)
        if top == 0:
            raise InexactDivision("remainder after dividing by a root")
        for e in [e for e in rem if e[lead] == top]:
            c = rem.pop(e)
            qe = e[:lead] + (top - 1,) + e[lead + 1:]
            qc = K.mul(c, inv)
            quo[qe] = K.add(quo[qe], qc) if qe in quo else qc
            for i, a in enumerate(alpha):
                if i == lead or K.is_zero(a):
                    continue
                te = list(qe)
                te[i] += 1
                te = tuple(te)
                v = K.neg(K.mul(qc, a))
                if te in rem:
                    s = K.add(rem[te], v)
                    if K.is_zero(s):
                        del rem[te]
                    else:
                        rem[te] = s
                else:
                    rem[te] = v
    return Poly(K, n, {e: c for e, c in quo.items() if not K.is_zero(c)}, clean=True)


def swap_divided_difference(exps: Exps, i: int, j: int, lam, K) -> dict:
    """``(x^A - s x^A) / (x_i - lam x_j)`` for ``s: x_i -> lam x_j, x_j -> lam^-1 x_i``.

    Closed form of the divided difference for reflections swapping two
    coordinates up to a scalar; returns ``{exps: raw coeff}``.
    """
    a, b = exps[i], exps[j]
    if a == b:
        return {}
    # with u = x_i, v = lam x_j:  x^A - s x^A = lam^-b (u^a v^b - u^b v^a) * rest
    m = min(a, b)
    e = abs(a - b)
    base_coef = K.pow(lam, -b)
    if a < b:
        base_coef = K.neg(base_coef)
    out = {}
    for r in range(e):
        # u^(m+r) v^(m+e-1-r)
        tv = m + e - 1 - r
        coef = K.mul(base_coef, K.pow(lam, tv))
        ne = list(exps)
        ne[i] = m + r
        ne[j] = tv
        out[tuple(ne)] = coef
    return out


def divided_difference(f: Poly, s) -> Poly:
    """``(f - s.f) / alpha_s`` for a reflection ``s`` (needs ``s.matrix`` and ``s.alpha``)."""
    K = f.K
    swap = getattr(s, "swap", None)
    if swap is not None and getattr(s, "field", None) is not None:
        i, j, lam = swap
        emb = _embedder(s.field, K)
        lam_k = emb(lam)
        out: dict = {}
        for e, c in f.terms.items():
            for ne, v in swap_divided_difference(e, i, j, lam_k, K).items():
                v = K.mul(v, c)
                out[ne] = K.add(out[ne], v) if ne in out else v
        return Poly(K, f.n, {e: c for e, c in out.items() if not K.is_zero(c)}, clean=True)
    emb = _embedder(getattr(s, "field", None), K)
    mat = [[emb(x) for x in row] for row in s.matrix]
    g = f - substitute(f, mat, K)
    return divide_by_linear(g, [emb(a) for a in s.alpha])


def _embedder(src, K):
    if src is None or src == K:
        return lambda a: a
    from .fields import embed
    return embed(src, K)


# ---------------------------------------------------------------------------
# Verma module vectors

class VermaVector:
    """``sum_i f_i (x) e_i`` with one :class:`Poly` per basis vector of tau."""

    __slots__ = ("components",)

    def __init__(self, components: Iterable[Poly]):
        comps = tuple(components)
        if not comps:
            raise ValueError("a Verma vector needs at least one component")
        K, n = comps[0].K, comps[0].n
        for c in comps:
            if c.K != K:
                raise FieldMismatch("components over different fields")
            if c.n != n:
                raise ArityMismatch("components with different variable counts")
        self.components = comps

    @classmethod
    def from_poly(cls, f: Poly, dim: int = 1, index: int = 0):
        comps = [Poly.zero(f.K, f.n) for _ in range(dim)]
        comps[index] = f
        return cls(comps)

    @classmethod
    def zero(cls, K, n, dim=1):
        return cls([Poly.zero(K, n) for _ in range(dim)])

    @property
    def K(self):
        return self.components[0].K

    @property
    def n(self):
        return self.components[0].n

    @property
    def dim(self):
        return len(self.components)

    def is_zero(self):
        return all(c.is_zero() for c in self.components)

    def __bool__(self):
        return not self.is_zero()

    def degrees(self):
        return sorted({d for c in self.components for d in c.degrees()})

    def degree(self):
        ds = self.degrees()
        return ds[-1] if ds else -1

    def is_homogeneous(self):
        return len(self.degrees()) <= 1

    def _check(self, o):
        if not isinstance(o, VermaVector):
            return False
        if o.dim != self.dim:
            raise ArityMismatch("tau dimensions differ")
        return True

    def __add__(self, o):
        if not self._check(o):
            return NotImplemented
        return VermaVector(a + b for a, b in zip(self.components, o.components))

    def __sub__(self, o):
        if not self._check(o):
            return NotImplemented
        return VermaVector(a - b for a, b in zip(self.components, o.components))

    def __neg__(self):
        return VermaVector(-a for a in self.components)

    def __eq__(self, o):
        if not isinstance(o, VermaVector):
            return NotImplemented
        return self.dim == o.dim and all(a == b for a, b in zip(self.components, o.components))

    def __hash__(self):
        return hash(self.components)

    def scale(self, a):
        return VermaVector(c.scale(a) for c in self.components)

    def times_poly(self, f: Poly):
        return VermaVector(c * f for c in self.components)

    def times_var(self, i: int):
        e = [0] * self.n
        e[i] = 1
        return VermaVector(c.mul_monomial(tuple(e)) for c in self.components)

    def graded_component(self, d):
        return VermaVector(c.graded_component(d) for c in self.components)

    def map_coeffs(self, fn, K2):
        return VermaVector(c.map_coeffs(fn, K2) for c in self.components)

    def to_str(self) -> str:
        if self.dim == 1:
            return self.components[0].to_str()
        return " + ".join(f"{c.to_str()} (*) e{i + 1}" for i, c in enumerate(self.components)
                          if not c.is_zero()) or "0"

    def __repr__(self):
        return f"VermaVector({self.to_str()})"

    __str__ = to_str


def group_act(matrix, tau_matrix, v: VermaVector, src_field=None) -> VermaVector:
    """Act by ``g`` given by its matrix on h* (columns = images of x_j) and on tau.

    ``tau_matrix[j][i]`` is the ``e_j`` coefficient of ``g e_i``.
    """
    K = v.K
    emb = _embedder(src_field, K)
    mat = [[emb(x) for x in row] for row in matrix]
    moved = [substitute(c, mat, K) for c in v.components]
    dim = v.dim
    out = []
    for j in range(dim):
        acc = Poly.zero(K, v.n)
        for i in range(dim):
            t = emb(tau_matrix[j][i])
            if not K.is_zero(t) and moved[i]:
                acc = acc + moved[i].scale(t)
        out.append(acc)
    return VermaVector(out)


# ---------------------------------------------------------------------------
# graded bases and coordinates

@dataclass(frozen=True)
class GradedBasis:
    """Basis ``(monomial, tau index)`` of the degree-``d`` piece, graded lex then tau index."""

    n: int
    degree: int
    dim_tau: int = 1
    items: tuple = field(init=False, repr=False)
    index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        items = tuple((m, t) for m in enumerate_monomials(self.n, self.degree)
                      for t in range(self.dim_tau))
        object.__setattr__(self, "items", items)
        object.__setattr__(self, "index", {it: i for i, it in enumerate(items)})

    def __len__(self):
        return len(self.items)

    def __iter__(self):
        return iter(self.items)

    def element(self, i, K) -> VermaVector:
        m, t = self.items[i]
        return VermaVector.from_poly(Poly.monomial(K, m), self.dim_tau, t)


@lru_cache(maxsize=None)
def enumerate_basis(n: int, d: int, dim_tau: int = 1) -> GradedBasis:
    if d < 0:
        raise InvalidInput("negative degree")
    b = GradedBasis(n, d, dim_tau)
    assert len(b) == comb(d + n - 1, n - 1) * dim_tau
    return b


def coords(v: VermaVector, basis: GradedBasis) -> list:
    """Coordinates of a homogeneous vector in ``basis`` (raw field elements)."""
    K = v.K
    if v.n != basis.n or v.dim != basis.dim_tau:
        raise ArityMismatch("vector and basis shapes differ")
    out = [K.zero] * len(basis)
    for t, comp in enumerate(v.components):
        for e, c in comp.terms.items():
            if sum(e) != basis.degree:
                raise DegreeMismatch(f"term of degree {sum(e)} outside degree {basis.degree}")
            out[basis.index[(e, t)]] = c
    return out


def from_coords(values: Sequence, basis: GradedBasis, K) -> VermaVector:
    comps = [dict() for _ in range(basis.dim_tau)]
    for (m, t), c in zip(basis.items, values):
        if not K.is_zero(c):
            comps[t][m] = c
    return VermaVector(Poly(K, basis.n, d, clean=True) for d in comps)


# ---------------------------------------------------------------------------
# parsing

_TERM_SPLIT = re.compile(r"\s*([+-])\s*")


def _split_terms(s: str):
    terms = []
    depth = 0
    cur = ""
    sign = "+"
    i = 0
    s = s.strip()
    while i < len(s):
        ch = s[i]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if depth == 0 and ch in "+-" and cur.strip() and not cur.rstrip().endswith(("^", "*", "/")):
            terms.append((sign, cur.strip()))
            sign = ch
            cur = ""
        elif depth == 0 and ch in "+-" and not cur.strip():
            sign = "-" if (ch == "-") != (sign == "-") else "+"
        else:
            cur += ch
        i += 1
    if cur.strip():
        terms.append((sign, cur.strip()))
    return terms


def parse_poly(s: str, K, n: int) -> Poly:
    """Parse the text grammar; coefficients are parsed by ``K.parse``."""
    acc = Poly.zero(K, n)
    s = s.strip()
    if s in ("", "0"):
        return acc
    for sign, body in _split_terms(s):
        factors = _split_factors(body)
        coef = K.one
        exps = [0] * n
        for fac in factors:
            m = re.fullmatch(r"x(\d+)(?:\^(\d+))?", fac)
            if m:
                i = int(m.group(1)) - 1
                if not 0 <= i < n:
                    raise ArityMismatch(f"variable x{i + 1} out of range for n={n}")
                exps[i] += int(m.group(2)) if m.group(2) else 1
            else:
                coef = K.mul(coef, K.parse(fac))
        if sign == "-":
            coef = K.neg(coef)
        acc = acc + Poly(K, n, {tuple(exps): coef})
    return acc


def _split_factors(body: str):
    out, depth, cur = [], 0, ""
    for ch in body:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "*" and depth == 0:
            out.append(cur)
            cur = ""
        else:
            cur += ch
    out.append(cur)
    return [f.strip() for f in out if f.strip()]


def parse_vector(s: str, K, n: int, dim: int) -> VermaVector:
    """Parse ``"poly (*) e1 + poly (*) e2"``; a bare poly means ``dim == 1``."""
    marks = list(re.finditer(r"\(\*\)\s*e(\d+)", s))
    if not marks:
        if dim != 1:
            raise InvalidInput("tensor components missing for dim(tau) > 1")
        return VermaVector([parse_poly(s, K, n)])
    comps = [Poly.zero(K, n) for _ in range(dim)]
    start = 0
    for m in marks:
        chunk = s[start:m.start()].strip()
        if chunk.startswith("+"):
            chunk = chunk[1:]
        idx = int(m.group(1)) - 1
        if not 0 <= idx < dim:
            raise ArityMismatch(f"e{idx + 1} out of range for dim {dim}")
        comps[idx] = comps[idx] + parse_poly(chunk, K, n)
        start = m.end()
    return VermaVector(comps)
