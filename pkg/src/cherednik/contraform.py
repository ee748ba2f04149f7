"""The contravariant form, Hilbert series of L_c, singular vectors and generators of J_c.

Two routes to J_c = ker(beta) are implemented:

* the *beta route* builds the matrix of the form in each degree by iterated
  Dunkl application, ``beta^d[:, (B, j)] = D_k^T beta^{d-1}[:, (B - e_k, j)]``;
* the *quotient tower* uses ``J_d = {v : D_k v in J_{d-1} for all k}``.  It
  keeps a full-row-rank matrix ``E_d`` whose kernel is ``J_d`` and obtains
  ``E_d`` as a row basis of the stacked products ``E_{d-1} D_k``.  Its rows have
  length dim M_d (never the size of beta), which keeps generic-c runs cheap.

Both return the same ranks; the tests compare them.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

import numpy as np

from .dunkl import DunklContext
from .fields import InvalidInput, RationalFunction, UPoly
from .linalg import poly_matmul, rank, rank_kernel, row_basis
from .polys import (Poly, VermaVector, coords, enumerate_basis, from_coords)


# ---------------------------------------------------------------------------
# result types

@dataclass
class GradedMatrix:
    degree: int
    row_basis: object
    col_basis: object
    entries: np.ndarray
    ctx: DunklContext = field(repr=False)

    @property
    def shape(self):
        return self.entries.shape

    def rank(self) -> int:
        if self.entries.size == 0:
            return 0
        return rank(self.ctx.K, self._as_field())

    def _as_field(self):
        return self.entries

    def entry(self, i, j):
        e = self.entries[i, j]
        if isinstance(e, UPoly):
            return RationalFunction(e)
        return int(e)

    def to_rows(self) -> list[list[str]]:
        K = self.ctx.K
        return [[K.to_str(self.entry(i, j)) for j in range(self.shape[1])] for i in range(self.shape[0])]


@dataclass
class HilbertSeries:
    coefficients: list
    complete: bool
    dim_tau: int = 1
    n: int = 1

    def __getitem__(self, d):
        return self.coefficients[d] if d < len(self.coefficients) else 0

    def total(self):
        return sum(self.coefficients)

    def is_palindromic(self) -> bool:
        return self.complete and self.coefficients == self.coefficients[::-1]

    def ci_degrees(self):
        """Degrees ``d_1..d_n`` with ``h = h(0) prod (1 - t^d_i) / (1 - t)^n``, or None.

        Factors with ``d_i = 1`` are invisible in the series and are reported as 1.
        """
        if not self.complete or not self.coefficients or self.coefficients[0] == 0:
            return None
        h0 = self.coefficients[0]
        if any(c % h0 for c in self.coefficients):
            return None
        num = [c // h0 for c in self.coefficients]
        for _ in range(self.n):
            num = _poly_mul_int(num, [1, -1])
        while num and num[-1] == 0:
            num.pop()
        degs = []
        while len(num) > 1:
            e = next(i for i in range(1, len(num)) if num[i])
            mult = -num[e]
            if mult <= 0:
                return None
            for _ in range(mult):
                num = _exact_div_binomial(num, e)
                if num is None:
                    return None
                degs.append(e)
        if num != [1] or len(degs) > self.n:
            return None
        return sorted([1] * (self.n - len(degs)) + degs)

    def factored(self) -> str | None:
        degs = self.ci_degrees()
        if degs is None:
            return None
        lead = "" if self.coefficients[0] == 1 else f"{self.coefficients[0]}*"
        parts = [f"(1-t^{d})" for d in degs if d > 1]
        return lead + "".join(parts) + f"/(1-t)^{self.n - degs.count(1)}" if parts else lead + "1"

    def to_dict(self):
        return {"coefficients": list(self.coefficients), "complete": self.complete,
                "palindromic": self.is_palindromic(), "ci_degrees": self.ci_degrees()}


def _poly_mul_int(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _exact_div_binomial(num, e):
    """``num / (1 - t^e)`` if exact, else None."""
    q = list(num)
    out = [0] * len(q)
    for i in range(len(q)):
        out[i] = q[i]
        if i + e < len(q):
            q[i + e] += q[i]
        elif q[i]:
            return None
    while out and out[-1] == 0:
        out.pop()
    return out if out else None


def series_from_factors(degrees: Sequence[int], n: int, lead: int = 1) -> list[int]:
    """Coefficients of ``lead * prod (1 - t^d) / (1 - t)^n`` (a polynomial when every factor is one)."""
    num = [lead]
    for d in degrees:
        num = _poly_mul_int(num, [1] + [0] * (d - 1) + [-1])
    for _ in range(n):
        # divide by (1 - t): running sums
        acc, out = 0, []
        for c in num:
            acc += c
            out.append(acc)
        num = out
    while num and num[-1] == 0:
        num.pop()
    return num


@dataclass
class SingularSpace:
    degree: int
    basis: list

    @property
    def dim(self):
        return len(self.basis)


# ---------------------------------------------------------------------------
# working-ring helpers

def _zero(ctx):
    return UPoly(ctx.base) if ctx.generic else 0


def _matmul(ctx, A, B):
    if not ctx.generic:
        return ctx.K.matmul(np.asarray(A, dtype=np.int64), np.asarray(B, dtype=np.int64))
    return poly_matmul(A, B, _zero(ctx))


def _identity(ctx, size):
    if not ctx.generic:
        return np.eye(size, dtype=np.int64)
    one, zero = UPoly(ctx.base, (1,)), UPoly(ctx.base)
    I = np.empty((size, size), dtype=object)
    I[:] = zero
    for i in range(size):
        I[i, i] = one
    return I


def _empty(ctx, ncols):
    return np.zeros((0, ncols), dtype=np.int64 if not ctx.generic else object)


# ---------------------------------------------------------------------------
# contravariant form

def beta_matrix(ctx: DunklContext, d: int, order: str = "first") -> GradedMatrix:
    """The form in degree ``d``: rows ``x^A (x) e_i``, columns ``y^B (x) e_j*``.

    ``order`` picks which variable of ``y^B`` is peeled off first; the result
    does not depend on it because the Dunkl operators commute.
    """
    if d < 0:
        raise InvalidInput("negative degree")
    cache = ctx.__dict__.setdefault("_beta_cache", {})
    key = (d, order)
    basis = enumerate_basis(ctx.n, d, ctx.dim_tau)
    if key not in cache:
        if d == 0:
            M = _identity(ctx, ctx.dim_tau)
        else:
            prev = beta_matrix(ctx, d - 1, order).entries
            prev_basis = enumerate_basis(ctx.n, d - 1, ctx.dim_tau)
            size = len(basis)
            M = np.empty((size, size), dtype=object if ctx.generic else np.int64)
            groups: dict = {}
            for col, (B, j) in enumerate(basis.items):
                nz = [k for k in range(ctx.n) if B[k]]
                k = nz[0] if order == "first" else nz[-1]
                Bm = B[:k] + (B[k] - 1,) + B[k + 1:]
                groups.setdefault(k, ([], []))
                groups[k][0].append(col)
                groups[k][1].append(prev_basis.index[(Bm, j)])
            for k, (cols, pcols) in groups.items():
                Dk = ctx.dunkl_matrix(d, k)
                M[:, cols] = _matmul(ctx, Dk.T, prev[:, pcols])
        cache[key] = M
    return GradedMatrix(d, basis, basis, cache[key], ctx)


# ---------------------------------------------------------------------------
# the quotient tower

class QuotientTower:
    """Graded pieces of L_c = M_c / J_c, degree by degree.

    ``E(d)`` is a full-row-rank matrix over the working ring whose kernel is
    J_d; its number of rows is dim (L_c)_d.
    """

    def __init__(self, ctx: DunklContext):
        self.ctx = ctx
        self._E = {0: (_identity(ctx, ctx.dim_tau), list(range(ctx.dim_tau)))}

    def _compute(self, d):
        ctx = self.ctx
        E_prev, _ = self.level(d - 1)
        ncols = len(enumerate_basis(ctx.n, d, ctx.dim_tau))
        if E_prev.shape[0] == 0:
            self._E[d] = (_empty(ctx, ncols), [])
            return
        blocks = [_matmul(ctx, E_prev, ctx.dunkl_matrix(d, k)) for k in range(ctx.n)]
        Phi = np.vstack(blocks)
        R, piv = row_basis(ctx.K, Phi)
        self._E[d] = (R if len(piv) else _empty(ctx, ncols), list(piv))

    def level(self, d):
        if d < 0:
            return _empty(self.ctx, 0), []
        for e in range(max(self._E) + 1, d + 1):
            self._compute(e)
        return self._E[d]

    def E(self, d):
        return self.level(d)[0]

    def pivots(self, d):
        return self.level(d)[1]

    def rank(self, d) -> int:
        return len(self.level(d)[1])

    def contains(self, v: VermaVector) -> bool:
        """Membership in J_c of a homogeneous vector."""
        ctx = self.ctx
        v = ctx.lift(v)
        if v.is_zero():
            return True
        if not v.is_homogeneous():
            raise InvalidInput("in_Jc needs a homogeneous vector")
        d = v.degree()
        E = self.E(d)
        if E.shape[0] == 0:
            return True
        x = coords(v, enumerate_basis(ctx.n, d, ctx.dim_tau))
        return all(ctx.K.is_zero(y) for y in _apply_rows(ctx, E, x))


def _apply_rows(ctx, M, x):
    K = ctx.K
    if not ctx.generic:
        return [int(a) for a in K.matmul(np.asarray(M, dtype=np.int64),
                                         np.asarray(x, dtype=np.int64).reshape(-1, 1))[:, 0]]
    out = []
    for i in range(M.shape[0]):
        acc = K.zero
        for j, a in enumerate(x):
            e = M[i, j]
            if e and not K.is_zero(a):
                acc = acc + RationalFunction(e) * a
        out.append(acc)
    return out


def _tower(ctx) -> QuotientTower:
    t = ctx.__dict__.get("_tower")
    if t is None:
        t = ctx.__dict__["_tower"] = QuotientTower(ctx)
    return t


# ---------------------------------------------------------------------------
# public operations

def hilbert_L(ctx: DunklContext, max_degree: int, method: str = "tower") -> HilbertSeries:
    """Graded dimensions of L_c up to ``max_degree``; stops after two consecutive zeros."""
    if max_degree < 0:
        raise InvalidInput("max_degree must be non-negative")
    coeffs = []
    zeros = 0
    complete = False
    for d in range(max_degree + 1):
        if method == "tower":
            r = _tower(ctx).rank(d)
        elif method == "beta":
            r = beta_matrix(ctx, d).rank()
        else:
            raise InvalidInput(f"unknown method {method!r}")
        coeffs.append(r)
        zeros = zeros + 1 if r == 0 else 0
        if zeros == 2:
            complete = True
            break
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return HilbertSeries(coeffs, complete, ctx.dim_tau, ctx.n)


def singular_space(ctx: DunklContext, d: int) -> SingularSpace:
    """Homogeneous degree-``d`` vectors killed by every Dunkl operator."""
    if d < 1:
        raise InvalidInput("singular vectors live in degree >= 1")
    basis = enumerate_basis(ctx.n, d, ctx.dim_tau)
    M = ctx.stacked_dunkl(d)
    if ctx.generic:
        _, kern = rank_kernel(ctx.K, M)
        kern = [_clear_denominators(ctx, v) for v in kern]
    else:
        _, kern = rank_kernel(ctx.K, M)
        kern = [[int(a) for a in v] for v in kern]
    return SingularSpace(d, [from_coords(v, basis, ctx.K) for v in kern])


def _clear_denominators(ctx, v):
    dens = [a.den for a in v if not a.is_zero() and not a.den.is_one()]
    if not dens:
        return list(v)
    l = dens[0]
    for q in dens[1:]:
        l = (l * q).exact_div(l.gcd(q))
    m = RationalFunction(l)
    return [a * m for a in v]


def in_Jc(ctx: DunklContext, v, method: str = "beta") -> bool:
    """Whether a homogeneous vector lies in J_c (left kernel of the form)."""
    v = ctx.lift(v)
    if v.is_zero():
        return True
    if not v.is_homogeneous():
        raise InvalidInput("in_Jc needs a homogeneous vector")
    if method == "tower":
        return _tower(ctx).contains(v)
    if method != "beta":
        raise InvalidInput(f"unknown method {method!r}")
    d = v.degree()
    beta = beta_matrix(ctx, d).entries
    x = coords(v, enumerate_basis(ctx.n, d, ctx.dim_tau))
    return all(ctx.K.is_zero(y) for y in _apply_rows(ctx, beta.T, x))


def generator_counts(ctx: DunklContext, max_degree: int) -> dict:
    """``{d: number of minimal generators of J_c in degree d}`` for ``d <= max_degree``.

    Uses the presentation ``L_{d-1}^n / (Koszul relations) -> M_d / (sum x_i J_{d-1})``:
    the number of generators in degree ``d`` is ``n r_{d-1} - rank(Rel_d) - r_d``.
    """
    tower = _tower(ctx)
    n, dim = ctx.n, ctx.dim_tau
    out = {}
    for d in range(1, max_degree + 1):
        r_prev = tower.rank(d - 1)
        r_d = tower.rank(d)
        if r_prev == 0:
            break
        rel_rank = 0
        if d >= 2 and tower.rank(d - 2):
            E1 = tower.E(d - 1)
            basis1 = enumerate_basis(n, d - 1, dim)
            basis2 = enumerate_basis(n, d - 2, dim)
            rows = []
            for pc in tower.pivots(d - 2):
                mono, t = basis2.items[pc]
                shifted = []
                for i in range(n):
                    e = list(mono)
                    e[i] += 1
                    shifted.append(E1[:, basis1.index[(tuple(e), t)]])
                for i, j in combinations(range(n), 2):
                    row = [None] * n
                    for blk in range(n):
                        row[blk] = _zeros_like_col(ctx, r_prev)
                    row[i] = shifted[j]
                    row[j] = _neg(ctx, shifted[i])
                    rows.append(np.concatenate(row))
            if rows:
                rel_rank = rank(ctx.K, np.vstack(rows))
        g = n * r_prev - rel_rank - r_d
        if g < 0:
            raise AssertionError(f"negative generator count in degree {d}")
        if g:
            out[d] = g
        if r_d == 0:
            # generators can still appear in this degree but not beyond it
            break
    return out


def _zeros_like_col(ctx, size):
    if not ctx.generic:
        return np.zeros(size, dtype=np.int64)
    z = np.empty(size, dtype=object)
    z[:] = UPoly(ctx.base)
    return z


def _neg(ctx, col):
    if not ctx.generic:
        return ctx.K.vneg(col)
    return np.array([-e for e in col], dtype=object)


def min_generator_degrees(ctx: DunklContext, max_degree: int) -> list[int]:
    """Sorted multiset of degrees of a minimal generating set of J_c (up to ``max_degree``)."""
    if max_degree < 1:
        raise InvalidInput("max_degree must be at least 1")
    out = []
    for d, cnt in sorted(generator_counts(ctx, max_degree).items()):
        out.extend([d] * cnt)
    return out


def generator_counts_bruteforce(ctx: DunklContext, max_degree: int) -> dict:
    """Oracle: ``dim J_d - dim(sum_i x_i J_{d-1})`` with explicit kernels of the form."""
    n, dim = ctx.n, ctx.dim_tau
    out = {}
    prev_kernel: list = []
    for d in range(0, max_degree + 1):
        beta = beta_matrix(ctx, d).entries
        basis = enumerate_basis(n, d, dim)
        _, kern = rank_kernel(ctx.K, _to_field(ctx, beta.T))
        span = []
        if d >= 1:
            prev_basis = enumerate_basis(n, d - 1, dim)
            for v in prev_kernel:
                vec = from_coords([a if ctx.generic else int(a) for a in v], prev_basis, ctx.K)
                for i in range(n):
                    span.append(coords(vec.times_var(i), basis))
        r_span = rank(ctx.K, np.array(span, dtype=object if ctx.generic else np.int64)) if span else 0
        g = len(kern) - r_span
        if g:
            out[d] = g
        prev_kernel = kern
    return out


def _to_field(ctx, M):
    if not ctx.generic:
        return M
    out = np.empty(M.shape, dtype=object)
    for idx, e in np.ndenumerate(M):
        out[idx] = RationalFunction(e)
    return out


# ---------------------------------------------------------------------------
# S_3 constructions

def _padic_valuation(x: Fraction, p: int) -> int:
    if x == 0:
        raise ValueError("valuation of zero")
    v = 0
    num, den = x.numerator, x.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


def _gbinom(a: Fraction, k: int) -> Fraction:
    out = Fraction(1)
    for i in range(k):
        out = out * (a - i) / (i + 1)
    return out


def taylor_case(p: int, c: int) -> int:
    """Which of the three parameter ranges contains ``c`` (0 when none does)."""
    if 0 < 3 * c < p:
        return 1
    if p < 3 * c and 2 * c < p:
        return 2
    if 2 * p < 3 * c and c < p:
        return 3
    return 0


def taylor_construction_G(ctx: DunklContext | int, c: int | None = None) -> list[VermaVector]:
    """Candidate generators ``dG/dx_1, dG/dx_2, x_1^p + x_2^p + x_3^p`` for S_3 at integer ``c``.

    ``G`` is the ``t^(3c'+1)`` coefficient of ``prod_i (1 - t x_i)^c'`` with
    ``c' = c + p/3`` in the first range and ``c - p/3`` otherwise.  The partial
    derivatives are computed over the rationals, divided by the smallest power
    of p occurring among their coefficients, and then reduced mod p.
    """
    if isinstance(ctx, DunklContext):
        if ctx.group.family != "Sn" or ctx.n != 3 or ctx.dim_tau != 1:
            raise InvalidInput("the construction is for S_3 with trivial tau")
        p = ctx.p
        K = ctx.K
        if c is None:
            raise InvalidInput("an integer representative of c is required")
    else:
        p = int(ctx)
        from .fields import gf
        K = gf(p)
    if p <= 3:
        raise InvalidInput("the construction needs p > 3")
    case = taylor_case(p, int(c))
    if case == 0:
        raise InvalidInput(f"c={c} is not in any covered range for p={p}")
    cp = Fraction(c) + (Fraction(p, 3) if case == 1 else -Fraction(p, 3))
    N = 3 * cp + 1
    if N.denominator != 1 or N < 1:
        raise InvalidInput(f"no t-coefficient of degree {N}")
    N = int(N)
    # coefficients of G: (-1)^N binom(c', i) binom(c', j) binom(c', k), i + j + k = N
    binoms = [_gbinom(cp, i) for i in range(N + 1)]
    sign = -1 if N % 2 else 1
    out = []
    for var in (0, 1):
        terms = {}
        for i in range(N + 1):
            for j in range(N + 1 - i):
                k = N - i - j
                e = [i, j, k]
                if e[var] == 0:
                    continue
                coef = sign * binoms[i] * binoms[j] * binoms[k] * e[var]
                if coef:
                    e[var] -= 1
                    terms[tuple(e)] = coef
        out.append(_reduce_mod_p(terms, p, K))
    g3 = Poly(K, 3, {(p, 0, 0): K.one, (0, p, 0): K.one, (0, 0, p): K.one})
    out.append(VermaVector([g3]))
    return out


def _reduce_mod_p(terms: dict, p: int, K) -> VermaVector:
    if not terms:
        return VermaVector([Poly.zero(K, 3)])
    v = min(_padic_valuation(c, p) for c in terms.values())
    scale = Fraction(p) ** (-v)
    red = {}
    for e, c in terms.items():
        x = c * scale
        if x.numerator % p == 0:
            continue
        red[e] = K.from_int(x.numerator * pow(x.denominator, -1, p))
    return VermaVector([Poly(K, 3, red)])


def vandermonde_power(ctx: DunklContext, e: int) -> VermaVector:
    """``((x_1 - x_2)(x_2 - x_3)(x_3 - x_1))^e`` in the working field."""
    K = ctx.K
    one, m1 = K.one, K.neg(K.one)
    f = Poly.linear(K, [one, m1, K.zero]) * Poly.linear(K, [K.zero, one, m1]) \
        * Poly.linear(K, [m1, K.zero, one])
    return VermaVector([f ** e])


def symmetrized_half_candidate(ctx: DunklContext):
    """Experiment: symmetrise ``x_1^p (x_1 - x_2)/(x_1 - x_3)`` over S_3.

    The sum is written over the common denominator ``V = prod_{i<j}(x_i - x_j)``
    (each transposition flips the sign of V).  Returns ``(numerator,
    quotient)`` where ``quotient`` is the polynomial sum if V divides the
    numerator and None otherwise.
    """
    from itertools import permutations
    from .polys import divide_by_linear, InexactDivision
    K = ctx.K
    p = ctx.p
    one, m1, z = K.one, K.neg(K.one), K.zero
    total = Poly.zero(K, 3)
    for perm in permutations(range(3)):
        x = [Poly.var(K, 3, perm[i]) for i in range(3)]
        term = (x[0] ** p) * (x[0] - x[1])
        # multiply by V / (x_perm0 - x_perm2) = the other two factors of V, with sign
        V_over = _vandermonde_without(K, perm[0], perm[2])
        total = total + term * V_over
    forms = [[one, m1, z], [one, z, m1], [z, one, m1]]
    q = total
    try:
        for f in forms:
            q = divide_by_linear(q, f)
    except InexactDivision:
        return total, None
    return total, VermaVector([q])


def _vandermonde_without(K, i, j):
    """``V / (x_i - x_j)`` where ``V = (x_1 - x_2)(x_1 - x_3)(x_2 - x_3)``."""
    one = Poly.const(K, 3, K.one)
    pairs = [(0, 1), (0, 2), (1, 2)]
    out = one
    sign = False
    for a, b in pairs:
        if {a, b} == {i, j}:
            if (a, b) != (i, j):
                sign = not sign
            continue
        out = out * (Poly.var(K, 3, a) - Poly.var(K, 3, b))
    return -out if sign else out
