"""Degree-p singular vectors for S_n with p | n and generic c, built order by order in c.

Writing ``F = F_0 + c F_1 + c^2 F_2 + ...`` with ``D_k = d_k - c B_k``, the
singularity condition becomes ``d_k F_0 = 0`` and ``d_k F_m = B_k F_{m-1}``.
Starting from ``F_0 = sum a_i x_i^p`` each step solves a linear system for
``F_m`` among degree-p polynomials without p-th powers.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Sequence

import numpy as np

from .dunkl import DunklContext, apply_B
from .fields import InvalidInput, RationalFunctionField, UPoly, RationalFunction, gf
from .groups import symmetric_group
from .linalg import rref_gf
from .polys import Poly, VermaVector, enumerate_monomials, parse_poly, partial


class NoSolution(ArithmeticError):
    """The equations d_k F_m = G_k have no common solution."""


class NonUnique(AssertionError):
    """More than one p-th-power-free solution; cannot happen for a consistent system."""


@lru_cache(maxsize=None)
def sn_context(p: int, n: int) -> DunklContext:
    """S_n over F_p; only the reflection data is used (the value of c is irrelevant)."""
    return DunklContext(symmetric_group(n, p), c=0)


def normalize_a(a: Sequence[int], p: int, require_zero_sum: bool = True) -> tuple:
    vals = tuple(int(x) % p for x in a)
    if require_zero_sum and sum(vals) % p:
        raise InvalidInput(f"the entries of a must sum to 0 mod {p}")
    return vals


def initial_term(a: Sequence[int], p: int) -> Poly:
    """F_0 = sum a_i x_i^p."""
    n = len(a)
    F = gf(p)
    terms = {}
    for i, ai in enumerate(a):
        e = [0] * n
        e[i] = p
        terms[tuple(e)] = ai % p
    return Poly(F, n, terms)


def is_pth_power_monomial(e, p) -> bool:
    return all(x % p == 0 for x in e)


def pth_power_part(f: Poly, p: int) -> Poly:
    return Poly(f.K, f.n, {e: c for e, c in f.terms.items() if is_pth_power_monomial(e, p)}, clean=True)


def B_all(f: Poly, p: int) -> list[Poly]:
    ctx = sn_context(p, f.n)
    return [apply_B(ctx, k, f) for k in range(f.n)]


def integrability_check(F: Poly, p: int | None = None) -> bool:
    """Whether ``d_i B_k F = d_k B_i F`` for all ``i, k`` (needed for the next step to exist)."""
    p = p or F.K.p
    G = B_all(F, p)
    return all(partial(G[k], i) == partial(G[i], k) for i, k in combinations(range(F.n), 2))


def _system(G: Sequence[Poly], p: int):
    n = G[0].n
    deg = max(g.degree() for g in G) + 1 if any(not g.is_zero() for g in G) else p
    unknowns = [e for e in enumerate_monomials(n, deg) if not is_pth_power_monomial(e, p)]
    rows_idx = {}
    for k in range(n):
        for e in enumerate_monomials(n, deg - 1):
            rows_idx[(k, e)] = len(rows_idx)
    A = np.zeros((len(rows_idx), len(unknowns) + 1), dtype=np.int64)
    for col, e in enumerate(unknowns):
        for k in range(n):
            if e[k] % p:
                me = e[:k] + (e[k] - 1,) + e[k + 1:]
                A[rows_idx[(k, me)], col] = e[k] % p
    for k, g in enumerate(G):
        for e, c in g.terms.items():
            if sum(e) != deg - 1:
                raise InvalidInput("right-hand sides must be homogeneous of one degree")
            A[rows_idx[(k, e)], -1] = c
    return A, unknowns, deg


def solve_step(G: Sequence[Poly], p: int | None = None) -> Poly:
    """The unique p-th-power-free ``F`` with ``d_k F = G_k`` for all ``k``."""
    p = p or G[0].K.p
    F = gf(p)
    n = G[0].n
    if all(g.is_zero() for g in G):
        return Poly.zero(F, n)
    A, unknowns, _ = _system(G, p)
    R, piv = rref_gf(F, A)
    ncols = len(unknowns)
    if ncols in piv:
        raise NoSolution("the mixed partial derivatives of the right-hand sides disagree")
    if len(piv) < ncols:
        raise NonUnique(f"{ncols - len(piv)} free coefficients among p-th-power-free monomials")
    terms = {unknowns[c]: int(R[i, -1]) for i, c in enumerate(piv)}
    return Poly(F, n, terms)


def antiderivative_solve(G: Sequence[Poly], p: int | None = None) -> Poly:
    """Second solver: integrate monomial by monomial, then check every equation."""
    p = p or G[0].K.p
    F = gf(p)
    n = G[0].n
    if all(g.is_zero() for g in G):
        return Poly.zero(F, n)
    deg = max(g.degree() for g in G) + 1
    terms = {}
    for e in enumerate_monomials(n, deg):
        k = next((k for k in range(n) if e[k] % p), None)
        if k is None:
            continue
        me = e[:k] + (e[k] - 1,) + e[k + 1:]
        c = G[k].coeff(me)
        if c:
            terms[e] = F.div(c, e[k] % p)
    out = Poly(F, n, terms)
    if any(partial(out, k) != G[k] for k in range(n)):
        raise NoSolution("the mixed partial derivatives of the right-hand sides disagree")
    return out


# ---------------------------------------------------------------------------
# closed forms

def _frac(F, x: Fraction):
    return F.div(F.from_int(x.numerator), F.from_int(x.denominator))


def closed_form_F1(a: Sequence[int], p: int) -> Poly:
    """F_1 = -sum_{i<j} sum_{r+s=p} (r a_i + s a_j)/(r s) x_i^r x_j^s."""
    if p == 2:
        raise InvalidInput("the closed form needs p != 2")
    a = normalize_a(a, p)
    n = len(a)
    F = gf(p)
    terms = {}
    for i, j in combinations(range(n), 2):
        for r in range(1, p):
            s = p - r
            e = [0] * n
            e[i], e[j] = r, s
            terms[tuple(e)] = _frac(F, -Fraction(r * a[i] + s * a[j], r * s))
    return Poly(F, n, terms)


def _harmonic(s):
    return sum((Fraction(1, d) for d in range(1, s + 1)), Fraction(0))


def closed_form_F2(a: Sequence[int], p: int) -> Poly:
    """The second-order term, with three-variable and two-variable parts."""
    if p == 2:
        raise InvalidInput("the closed form needs p != 2")
    a = normalize_a(a, p)
    n = len(a)
    F = gf(p)
    terms = {}
    for i, j, k in combinations(range(n), 3):
        for r in range(1, p):
            for s in range(1, p - r):
                t = p - r - s
                e = [0] * n
                e[i], e[j], e[k] = r, s, t
                terms[tuple(e)] = _frac(F, Fraction(r * a[i] + s * a[j] + t * a[k], r * s * t))
    for i, j in combinations(range(n), 2):
        for r in range(1, p):
            s = p - r
            e = [0] * n
            e[i], e[j] = r, s
            terms[tuple(e)] = _frac(F, Fraction(a[i] - a[j], r) * (Fraction(1, s) - 2 * _harmonic(s)))
    return Poly(F, n, terms)


def closed_form_p3(a: Sequence[int], n: int | None = None) -> Poly:
    """The terminating degree-3 singular vector over F_3(c) for S_n with 3 | n."""
    p = 3
    a = normalize_a(a, p)
    n = len(a) if n is None else n
    if len(a) != n or n % 3:
        raise InvalidInput("needs 3 | n and one entry of a per variable")
    F = gf(3)
    K = RationalFunctionField(F)
    c = K.c
    c2 = c * c
    terms: dict = {}

    def add(e, coef):
        if not K.is_zero(coef):
            terms[e] = terms[e] + coef if e in terms else coef

    for i in range(n):
        e = [0] * n
        e[i] = 3
        # a_i x_i^3 - c^2 a_i x_i^3
        add(tuple(e), K.from_int(a[i]) - c2 * K.from_int(a[i]))
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            e = [0] * n
            e[i], e[j] = 2, 1
            w = K.from_int(a[i] - a[j])
            add(tuple(e), -(c * w) + c2 * w)
    for i, j, k in combinations(range(n), 3):
        e = [0] * n
        e[i] = e[j] = e[k] = 1
        add(tuple(e), c2 * K.from_int(a[i] + a[j] + a[k]))
    return Poly(K, n, terms)


# ---------------------------------------------------------------------------
# the recursion

@dataclass
class RecursionStep:
    F: Poly
    added: Poly

    def total(self):
        return self.F + self.added


@dataclass
class RecursionState:
    p: int
    n: int
    a: tuple
    policy: str
    steps: list = field(default_factory=list)
    terminated: bool = False
    failure: str | None = None

    @property
    def terminated_at(self):
        return len(self.steps) - 1 if self.terminated else None

    def series(self) -> Poly:
        """``sum_m c^m (F_m + P_m)`` as a polynomial over F_p(c)."""
        F = gf(self.p)
        K = RationalFunctionField(F)
        terms: dict = {}
        for m, st in enumerate(self.steps):
            cm = RationalFunction(UPoly(F, [0] * m + [1]))
            for e, v in st.total().terms.items():
                t = K.from_base(v) * cm
                terms[e] = terms[e] + t if e in terms else t
        return Poly(K, self.n, terms)

    def to_dict(self):
        return {
            "p": self.p, "n": self.n, "a": list(self.a), "policy": self.policy,
            "terminatedAt": self.terminated_at, "failure": self.failure,
            "steps": [{"F": st.F.to_str(), "added": st.added.to_str()} for st in self.steps],
        }

    @classmethod
    def from_dict(cls, d):
        F = gf(int(d["p"]))
        n = int(d["n"])
        steps = [RecursionStep(parse_poly(s["F"], F, n), parse_poly(s["added"], F, n)) for s in d["steps"]]
        return cls(int(d["p"]), n, tuple(d["a"]), d["policy"], steps,
                   d["terminatedAt"] is not None, d.get("failure"))


def terminating_pth_powers(Fm: Poly, p: int):
    """``P = sum b_i x_i^p`` with ``B_k(F_m + P) = 0`` for every k, or None.

    Among the solutions (unique up to multiples of ``sum x_i^p``) the one with
    the last free coefficient set to zero is returned.
    """
    n = Fm.n
    F = gf(p)
    targets = B_all(Fm, p)
    cols = [B_all(initial_term([1 if l == i else 0 for l in range(n)], p), p) for i in range(n)]
    monos = [enumerate_monomials(n, p - 1)]
    index = {}
    for k in range(n):
        for e in monos[0]:
            index[(k, e)] = len(index)
    A = np.zeros((len(index), n + 1), dtype=np.int64)
    for i, Bi in enumerate(cols):
        for k in range(n):
            for e, c in Bi[k].terms.items():
                A[index[(k, e)], i] = c
    for k in range(n):
        for e, c in targets[k].terms.items():
            if sum(e) != p - 1:
                return None
            A[index[(k, e)], n] = F.neg(c)
    R, piv = rref_gf(F, A)
    if n in piv:
        return None
    b = [0] * n
    for i, cidx in enumerate(piv):
        b[cidx] = int(R[i, n])
    return initial_term(b, p)


def run_recursion(a: Sequence[int], p: int, max_steps: int = 6, policy: str = "never",
                  solver=solve_step, add_from: int = 2) -> RecursionState:
    """Build ``F_0, F_1, ...`` until ``B_k F_m = 0`` for all k or ``max_steps`` is reached.

    ``policy="heuristic"`` tries, from step ``add_from`` on, to add p-th
    powers to the newest term so that the process stops there.  The default
    keeps ``F_1`` free of p-th powers, as in its closed form; ``add_from=1``
    allows stopping one step earlier, which for p = 2 reproduces the
    ``c (x_i + x_j)(sum x_k) + x_i^2 + x_j^2`` generators.  A failing step (no
    solution) is recorded in ``state.failure`` and ends the run.
    """
    if policy not in ("never", "heuristic"):
        raise InvalidInput(f"unknown policy {policy!r}")
    a = normalize_a(a, p, require_zero_sum=False)
    n = len(a)
    if n % p:
        raise InvalidInput(f"p={p} must divide n={n}")
    F = gf(p)
    zero = Poly.zero(F, n)
    state = RecursionState(p, n, a, policy, [RecursionStep(initial_term(a, p), zero)])
    for m in range(1, max_steps + 1):
        prev = state.steps[-1].total()
        G = B_all(prev, p)
        if all(g.is_zero() for g in G):
            state.terminated = True
            return state
        try:
            Fm = solver(G, p)
        except NoSolution as exc:
            state.failure = f"step {m}: {exc}"
            return state
        added = zero
        if policy == "heuristic" and m >= add_from:
            P = terminating_pth_powers(Fm, p)
            if P is not None:
                added = P
        state.steps.append(RecursionStep(Fm, added))
    G = B_all(state.steps[-1].total(), p)
    state.terminated = all(g.is_zero() for g in G)
    return state


def truncation_residual(state: RecursionState, M: int, k: int):
    """``D_k`` applied to ``sum_{m <= M} c^m F_m`` over F_p(c), as a VermaVector."""
    from .dunkl import DunklContext, apply_dunkl
    trunc = RecursionState(state.p, state.n, state.a, state.policy, state.steps[:M + 1])
    ctx = DunklContext(symmetric_group(state.n, state.p), c="generic")
    return apply_dunkl(ctx, k, VermaVector([trunc.series()]))


def measured_space_dimension(p: int, n: int, order: int) -> int:
    """Dimension over F_p of the span of the order-``order`` truncations over a basis of a-vectors."""
    F = gf(p)
    vecs = []
    basis = []
    for i in range(n - 1):
        a = [0] * n
        a[i], a[n - 1] = 1, p - 1
        basis.append(a)
    for a in basis:
        st = run_recursion(a, p, max_steps=order, policy="never")
        row = []
        for m in range(order + 1):
            Fm = st.steps[m].total() if m < len(st.steps) else Poly.zero(F, n)
            row.extend(Fm.coeff(e) for e in enumerate_monomials(n, p))
        vecs.append(row)
    return len(rref_gf(F, np.array(vecs, dtype=np.int64))[1])
