"""Dunkl operators on the Verma module M_c = Sym(h*) (x) tau.

With hbar = 1 and every reflection an involution (lambda_s = -1)::

    D_k(f (x) v) = d_k f (x) v - sum_s c_s <y_k, alpha_s> (f - s.f)/alpha_s (x) s(v)

Two independent code paths are provided: :func:`apply_dunkl` works on sparse
polynomials, while :meth:`DunklContext.dunkl_matrix` assembles the operator as
a matrix between graded pieces (used by the contravariant form).  The matrix
path splits ``D_k = d_k - sum_class c_class B_{k,class}`` so that the
structure matrices are computed once over the base field and specialised to
any ``c``.
"""
from __future__ import annotations

from math import lcm

import numpy as np

from .fields import (GF, FieldElem, InvalidInput, RationalFunction, RationalFunctionField, UPoly,
                     embed, gf)
from .groups import ReflectionGroup, TauRep, make_tau
from .polys import (Poly, VermaVector, divided_difference, enumerate_basis, group_act, partial,
                    swap_divided_difference)

GENERIC = "generic"


def _parse_value(F: GF, value):
    """A special value of c as a raw element of ``F`` (ints, ``"a/b"``, field strings)."""
    if isinstance(value, (int, np.integer)):
        return F.from_int(int(value))
    if isinstance(value, str):
        s = value.strip()
        if "/" in s and "z" not in s:
            num, den = s.split("/", 1)
            return F.div(F.from_int(int(num)), F.from_int(int(den)))
        return F.parse(s)
    raise InvalidInput(f"cannot interpret {value!r} as a parameter value")


class DunklContext:
    """Group, representation and parameters ``c`` (one per conjugacy class of reflections).

    ``c`` may be ``"generic"`` (a transcendental parameter: coefficients in
    F_q(c)), a value (int, ``"a/b"``, field string or :class:`FieldElem`), or
    a dict ``{class_id: value-or-"generic"}``.  All generic classes share the
    same symbol ``c``.
    """

    def __init__(self, group: ReflectionGroup, tau: TauRep | str | None = None, c=GENERIC):
        self.group = group
        if tau is None or isinstance(tau, str):
            tau = make_tau(group, tau or "trivial")
        if len(tau.matrices) != len(group.reflections):
            raise InvalidInput("tau matrices do not match the reflections")
        self.tau = tau
        spec = c if isinstance(c, dict) else {cls: c for cls in range(group.num_classes)}
        if set(spec) != set(range(group.num_classes)):
            raise InvalidInput(f"expected parameters for classes {list(range(group.num_classes))}")
        # the base field must hold the group data and every special value
        k = group.field.k
        for v in spec.values():
            if isinstance(v, FieldElem):
                if v.field.p != group.p:
                    raise InvalidInput("parameter lives in a field of another characteristic")
                k = lcm(k, v.field.k)
        self.base = group.field if k == group.field.k else gf(group.p, k)
        self._emb_group = embed(group.field, self.base)
        values = {}
        for cls, v in spec.items():
            if v is None or (isinstance(v, str) and v.strip().lower() in (GENERIC, "c")):
                values[cls] = None
            elif isinstance(v, FieldElem):
                values[cls] = embed(v.field, self.base)(v.value)
            else:
                values[cls] = self._emb_group(_parse_value(group.field, v))
        self.c_values = values
        self.generic = any(v is None for v in values.values())
        self.K = RationalFunctionField(self.base) if self.generic else self.base
        self._emb = embed(group.field, self.K)
        self._struct: dict = {}
        self._dmats: dict = {}

    # -- descriptions
    @property
    def n(self):
        return self.group.n

    @property
    def dim_tau(self):
        return self.tau.dim

    @property
    def p(self):
        return self.group.p

    def c_mode(self):
        return GENERIC if self.generic and len(set(self.c_values.values())) == 1 else "value"

    def describe_c(self) -> str:
        parts = []
        for cls in sorted(self.c_values):
            v = self.c_values[cls]
            parts.append("c" if v is None else self.base.to_str(v))
        return parts[0] if len(set(parts)) == 1 else ",".join(parts)

    def c_for_class(self, cls):
        """The parameter of a class as a raw element of ``K``."""
        v = self.c_values[cls]
        if v is None:
            return self.K.c
        return self.K.from_base(v) if self.generic else v

    def __repr__(self):
        return f"DunklContext({self.group.name()}, {self.tau.label}, c={self.describe_c()}, K={self.K!r})"

    # -- coercion
    def lift(self, v):
        """Coerce a Poly / VermaVector into the working field ``K``."""
        if isinstance(v, Poly):
            v = VermaVector([v])
        if v.K == self.K:
            return v
        e = embed(v.K, self.K)
        return v.map_coeffs(e, self.K)

    def poly(self, text: str) -> Poly:
        from .polys import parse_poly
        return parse_poly(text, self.K, self.n)

    def vector(self, text: str) -> VermaVector:
        from .polys import parse_vector
        return parse_vector(text, self.K, self.n, self.dim_tau)

    # -- structure matrices
    def structure(self, d: int):
        """``(P, B)`` with ``P[k]`` the matrix of d_k and ``B[cls][k]`` of B_{k,cls}, degree d -> d-1.

        Entries are raw elements of the base field; rows follow the degree
        ``d-1`` basis and columns the degree ``d`` basis.
        """
        if d in self._struct:
            return self._struct[d]
        F = self.base
        n, dim = self.n, self.dim_tau
        src = enumerate_basis(n, d, dim)
        ncols = len(src)
        nrows = len(enumerate_basis(n, d - 1, dim)) if d > 0 else 0
        P = [np.zeros((nrows, ncols), dtype=np.int64) for _ in range(n)]
        B = {cls: [np.zeros((nrows, ncols), dtype=np.int64) for _ in range(n)]
             for cls in range(self.group.num_classes)}
        if d == 0:
            self._struct[d] = (P, B)
            return P, B
        dst = enumerate_basis(n, d - 1, dim)
        emb = self._emb_group
        refl = []
        for i, s in enumerate(self.group.reflections):
            tau_cols = [[(j, emb(self.tau.matrices[i][j][t])) for j in range(dim)
                         if self.tau.matrices[i][j][t]] for t in range(dim)]
            alpha = [emb(a) for a in s.alpha]
            ks = [k for k in range(n) if alpha[k]]
            swap = (s.swap[0], s.swap[1], emb(s.swap[2])) if s.swap else None
            refl.append((s, swap, tau_cols, alpha, ks))
        monos = sorted({m for m, _ in src.items}, key=lambda m: src.index[(m, 0)])
        for m in monos:
            for k in range(n):
                a = m[k] % F.p
                if a:
                    me = m[:k] + (m[k] - 1,) + m[k + 1:]
                    for t in range(dim):
                        P[k][dst.index[(me, t)], src.index[(m, t)]] = a
            for s, swap, tau_cols, alpha, ks in refl:
                if swap is not None:
                    dd = swap_divided_difference(m, swap[0], swap[1], swap[2], F)
                else:
                    g = divided_difference(Poly.monomial(F, m), s)
                    dd = g.terms
                if not dd:
                    continue
                Bc = B[s.class_id]
                for t in range(dim):
                    col = src.index[(m, t)]
                    for j, tv in tau_cols[t]:
                        for me, w in dd.items():
                            w2 = F.mul(w, tv)
                            row = dst.index[(me, j)]
                            for k in ks:
                                M = Bc[k]
                                M[row, col] = F.add(int(M[row, col]), F.mul(w2, alpha[k]))
        self._struct[d] = (P, B)
        return P, B

    def dunkl_matrix(self, d: int, k: int):
        """Matrix of D_k from degree ``d`` to ``d-1`` over the working ring.

        An ``int64`` array over F_q for special ``c``; an object array of
        :class:`UPoly` (entries of c-degree at most 1) for generic ``c``.
        """
        key = (d, k)
        if key in self._dmats:
            return self._dmats[key]
        F = self.base
        P, B = self.structure(d)
        const = P[k].copy()
        lin = np.zeros_like(const)
        for cls, v in self.c_values.items():
            Bk = B[cls][k]
            if v is None:
                lin = F.vsub(lin, Bk)
            elif v:
                const = F.vsub(const, F.vmul(Bk, v))
        if not self.generic:
            M = const
        else:
            M = np.empty(const.shape, dtype=object)
            for idx in np.ndindex(const.shape):
                M[idx] = UPoly(F, (int(const[idx]), int(lin[idx])))
        self._dmats[key] = M
        return M

    def dunkl_matrices(self, d: int) -> list:
        return [self.dunkl_matrix(d, k) for k in range(self.n)]

    def stacked_dunkl(self, d: int):
        """All D_k stacked vertically: ``n * dim(d-1)`` rows, ``dim(d)`` columns."""
        mats = self.dunkl_matrices(d)
        return np.vstack(mats) if mats[0].size or mats[0].shape[0] else mats[0]

    def clear_cache(self):
        self._struct.clear()
        self._dmats.clear()


def _coerced(ctx: DunklContext, v) -> VermaVector:
    v = ctx.lift(v)
    if v.dim != ctx.dim_tau or v.n != ctx.n:
        raise InvalidInput("vector shape does not match the context")
    return v


def apply_dunkl(ctx: DunklContext, k: int, v) -> VermaVector:
    """D_{y_k} applied to a Verma vector (polynomial path)."""
    v = _coerced(ctx, v)
    K = ctx.K
    if not 0 <= k < ctx.n:
        raise InvalidInput(f"variable index {k} out of range")
    out = [partial(c, k) for c in v.components]
    for i, s in enumerate(ctx.group.reflections):
        ak = s.alpha[k]
        if not ak:
            continue
        coef = K.mul(ctx.c_for_class(s.class_id), ctx._emb(ak))
        if K.is_zero(coef):
            continue
        tau = ctx.tau.matrices[i]
        for t, comp in enumerate(v.components):
            if comp.is_zero():
                continue
            dd = divided_difference(comp, s)
            if dd.is_zero():
                continue
            for j in range(ctx.dim_tau):
                tv = tau[j][t]
                if tv:
                    out[j] = out[j] - dd.scale(K.mul(coef, ctx._emb(tv)))
    return VermaVector(out)


def apply_dunkl_y(ctx: DunklContext, y, v) -> VermaVector:
    """D_y for ``y = sum_k y[k] y_k`` (raw coefficients in ``K``)."""
    v = _coerced(ctx, v)
    acc = VermaVector.zero(ctx.K, ctx.n, ctx.dim_tau)
    for k, yk in enumerate(y):
        if not ctx.K.is_zero(yk):
            acc = acc + apply_dunkl(ctx, k, v).scale(yk)
    return acc


def is_singular(ctx: DunklContext, v) -> bool:
    """True iff every Dunkl operator kills ``v``."""
    v = _coerced(ctx, v)
    return all(apply_dunkl(ctx, k, v).is_zero() for k in range(ctx.n))


def apply_B(ctx: DunklContext, k: int, f: Poly) -> Poly:
    """B_k f = sum_{j != k} (f - s_kj f)/(x_k - x_j), the c-linear part of D_k for S_n."""
    if ctx.group.family != "Sn" or ctx.dim_tau != 1:
        raise InvalidInput("B_k is defined for S_n with trivial tau")
    K = f.K
    emb = embed(ctx.group.field, K)
    acc = Poly.zero(K, f.n)
    for s in ctx.group.reflections:
        ak = s.alpha[k]
        if ak:
            acc = acc + divided_difference(f, s).scale(emb(ak))
    return acc


def act(ctx: DunklContext, word, v) -> VermaVector:
    """Act on ``v`` by the group element ``s_{w0} s_{w1} ...``."""
    v = _coerced(ctx, v)
    for i in reversed(list(word)):
        s = ctx.group.reflections[i]
        v = group_act(s.matrix, ctx.tau.matrices[i], v, ctx.group.field)
    return v


def check_algebra_relation(ctx: DunklContext, k: int, j: int, v) -> bool:
    """Check ``[D_k, x_j] v = delta_kj v - sum_s c_s <y_k, alpha_s><x_j, alpha_s^vee> s(v)``."""
    v = _coerced(ctx, v)
    K = ctx.K
    lhs = apply_dunkl(ctx, k, v.times_var(j)) - apply_dunkl(ctx, k, v).times_var(j)
    rhs = v if k == j else VermaVector.zero(K, ctx.n, ctx.dim_tau)
    for i, s in enumerate(ctx.group.reflections):
        w = ctx.group.field.mul(s.alpha[k], s.alpha_check[j])
        if not w:
            continue
        coef = K.mul(ctx.c_for_class(s.class_id), ctx._emb(w))
        if K.is_zero(coef):
            continue
        sv = group_act(s.matrix, ctx.tau.matrices[i], v, ctx.group.field)
        rhs = rhs - sv.scale(coef)
    return lhs == rhs


def matrix_apply(ctx: DunklContext, k: int, v) -> VermaVector:
    """D_k via the assembled matrix (second, independent code path)."""
    from .polys import coords, from_coords
    v = _coerced(ctx, v)
    d = v.degree()
    if d <= 0:
        return VermaVector.zero(ctx.K, ctx.n, ctx.dim_tau)
    M = ctx.dunkl_matrix(d, k)
    x = coords(v, enumerate_basis(ctx.n, d, ctx.dim_tau))
    dst = enumerate_basis(ctx.n, d - 1, ctx.dim_tau)
    if not ctx.generic:
        y = ctx.K.matmul(M, np.asarray(x, dtype=np.int64).reshape(-1, 1))[:, 0]
        return from_coords([int(a) for a in y], dst, ctx.K)
    out = []
    for r in range(M.shape[0]):
        acc = ctx.K.zero
        for cidx, a in enumerate(x):
            e = M[r, cidx]
            if e and a:
                acc = acc + RationalFunction(e) * a
        out.append(acc)
    return from_coords(out, dst, ctx.K)
