"""Exact rank, row reduction and kernels over F_q and F_q(c).

Finite-field matrices are ``int64`` numpy arrays of raw elements and are
reduced with vectorised Gauss-Jordan elimination.  Matrices over F_q(c) are
numpy ``object`` arrays; they are cleared of denominators row by row and
reduced fraction-free (Bareiss) over F_q[c], dividing only at the very end.

Inside the graded computations we keep the generic case polynomial: the
"working ring" is F_q for special ``c`` and F_q[c] (:class:`UPoly` entries)
for generic ``c``.  :func:`row_basis` returns a full-row-rank matrix with the
same row space (RREF over F_q; primitive reduced rows over F_q[c]).
"""
from __future__ import annotations

import random
from functools import reduce

import numpy as np

from .fields import (GF, FieldMismatch, RationalFunction, RationalFunctionField, UPoly,
                     embed, evaluation_field)


# ---------------------------------------------------------------------------
# finite fields

def rref_gf(F: GF, A) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over ``F``; returns the nonzero rows and pivot columns."""
    A = np.array(A, dtype=np.int64, copy=True)
    if A.ndim != 2:
        raise ValueError("expected a 2-d matrix")
    rows, cols = A.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            A[[r, i]] = A[[i, r]]
        lead = int(A[r, c])
        if lead != 1:
            A[r] = F.vmul(A[r], F.inv(lead))
        col = A[:, c].copy()
        col[r] = 0
        others = np.flatnonzero(col)
        if others.size:
            A[others] = F.vsub(A[others], F.vmul(col[others][:, None], A[r][None, :]))
        pivots.append(c)
        r += 1
    return A[:r], pivots


def _kernel_from_rref(F_zero_like, R, pivots, ncols, neg, one):
    free = [j for j in range(ncols) if j not in set(pivots)]
    basis = []
    for f in free:
        v = np.empty(ncols, dtype=R.dtype if R.size else object)
        v[:] = F_zero_like
        v[f] = one
        for i, pc in enumerate(pivots):
            v[pc] = neg(R[i, f])
        basis.append(v)
    return basis


# ---------------------------------------------------------------------------
# F_q[c]: fraction-free elimination

def bareiss(rows: list[list[UPoly]], zero: UPoly) -> tuple[list[list[UPoly]], list[int]]:
    """Fraction-free row echelon form of a matrix over F_q[c].

    Every entry produced is a minor of the input, so the division by the
    previous pivot is exact.  Returns the nonzero echelon rows and pivot columns.
    """
    A = [list(r) for r in rows]
    nrows = len(A)
    ncols = len(A[0]) if A else 0
    prev = UPoly(zero.F, (1,))
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        best = None
        for i in range(r, nrows):
            e = A[i][c]
            if e and (best is None or e.degree < A[best][c].degree):
                best = i
                if e.degree == 0:
                    break
        if best is None:
            continue
        A[r], A[best] = A[best], A[r]
        piv_row = A[r]
        pv = piv_row[c]
        for i in range(r + 1, nrows):
            row = A[i]
            a = row[c]
            if not a:
                if not prev.is_one() or not pv.is_one():
                    for j in range(c + 1, ncols):
                        if row[j]:
                            row[j] = (pv * row[j]).exact_div(prev)
                continue
            for j in range(c + 1, ncols):
                x, y = row[j], piv_row[j]
                if not x and not y:
                    continue
                row[j] = (pv * x - a * y).exact_div(prev)
            row[c] = zero
        prev = pv
        pivots.append(c)
        r += 1
    return A[:r], pivots


def _content(row):
    g = None
    for e in row:
        if e:
            g = e if g is None else g.gcd(e)
            if g.degree == 0:
                return g.monic()
    return g


def _primitive(row, pivot_col):
    """Divide a polynomial row by its content and make the pivot entry monic."""
    g = _content(row)
    lead = row[pivot_col]
    if g is not None and g.degree > 0:
        row = [e.exact_div(g) if e else e for e in row]
        lead = row[pivot_col]
    lc = lead.lc()
    if lc != 1:
        inv = lead.F.inv(lc)
        row = [e.scale(inv) if e else e for e in row]
    return row


def primitive_rref(U: list[list[UPoly]], pivots: list[int]) -> list[list[UPoly]]:
    """Back-substitute echelon rows so each row vanishes at all other pivots.

    Rows are kept primitive (content removed), so row ``i`` equals the true
    RREF row times the polynomial ``row[pivots[i]]``.
    """
    R = [list(r) for r in U]
    for i in reversed(range(len(R))):
        R[i] = _primitive(R[i], pivots[i])
        pc = pivots[i]
        pv = R[i][pc]
        for h in range(i):
            a = R[h][pc]
            if not a:
                continue
            R[h] = [pv * x - a * y if (x or y) else x for x, y in zip(R[h], R[i])]
    for i in range(len(R)):
        R[i] = _primitive(R[i], pivots[i])
    return R


def _as_poly_rows(K: RationalFunctionField, M) -> list[list[UPoly]]:
    """Clear denominators row by row (rank and kernel are unchanged)."""
    out = []
    zero = UPoly(K.base)
    for row in M:
        dens = [e.den for e in row if isinstance(e, RationalFunction) and not e.den.is_one()]
        if dens:
            l = reduce(lambda a, b: (a * b).exact_div(a.gcd(b)), dens)
            out.append([(e.num * l.exact_div(e.den)) if e.num else zero for e in row])
        else:
            out.append([e.num if isinstance(e, RationalFunction) else e for e in row])
    return out


# ---------------------------------------------------------------------------
# evaluation at random points of a large extension

def evaluate_matrix(M, point: int, big: GF, emb) -> np.ndarray:
    """Evaluate a matrix of :class:`UPoly` / :class:`RationalFunction` at ``c = point``."""
    M = np.asarray(M, dtype=object)
    out = np.zeros(M.shape, dtype=np.int64)
    for idx, e in np.ndenumerate(M):
        if isinstance(e, RationalFunction):
            out[idx] = e.evaluate(point, big, emb)
        elif isinstance(e, UPoly):
            out[idx] = e(point, big, emb)
        else:
            out[idx] = emb(int(e))
    return out


def _eval_setup(base: GF, seed: int):
    big = evaluation_field(base)
    emb = embed(base, big)
    rng = random.Random(seed)
    return big, emb, rng


def evaluated_rank(M, base: GF, seed: int = 0) -> int:
    """Rank after substituting a pseudo-random ``c`` from a large extension of ``base``.

    Never exceeds the rank over F_q(c).
    """
    big, emb, rng = _eval_setup(base, seed)
    for _ in range(8):
        pt = rng.randrange(base.q, big.q)
        try:
            E = evaluate_matrix(M, pt, big, emb)
        except ZeroDivisionError:
            continue
        return len(rref_gf(big, E)[1]) if E.size else 0
    raise ArithmeticError("could not find an evaluation point avoiding denominators")


def _full_column_rank_certificate(P: list[list[UPoly]], base: GF) -> bool:
    """True only if some specialisation of ``c`` has full column rank (exact certificate)."""
    if not P or not P[0] or len(P) < len(P[0]):
        return False
    return evaluated_rank(np.array(P, dtype=object), base, seed=len(P) * 7919 + len(P[0])) == len(P[0])


# ---------------------------------------------------------------------------
# public entry points

def row_basis(K, M):
    """Full-row-rank matrix with the same row space as ``M``, plus pivot columns.

    For finite fields ``M`` is an int array and the RREF is returned.  For
    F_q(c), ``M`` may hold :class:`UPoly` or :class:`RationalFunction` entries
    and the primitive reduced rows (entries in F_q[c]) are returned as an
    object array.
    """
    if isinstance(K, GF):
        return rref_gf(K, M)
    M = np.asarray(M, dtype=object)
    nrows, ncols = M.shape
    if nrows == 0 or ncols == 0:
        return np.empty((0, ncols), dtype=object), []
    P = _as_poly_rows(K, M)
    if _full_column_rank_certificate(P, K.base):
        one, zero = UPoly(K.base, (1,)), UPoly(K.base)
        I = np.empty((ncols, ncols), dtype=object)
        I[:] = zero
        for i in range(ncols):
            I[i, i] = one
        return I, list(range(ncols))
    U, piv = bareiss(P, UPoly(K.base))
    R = primitive_rref(U, piv)
    out = np.empty((len(R), ncols), dtype=object)
    for i, row in enumerate(R):
        out[i, :] = row
    return out, piv


def rref(K, M):
    """True reduced row echelon form over ``K`` (entries in ``K``)."""
    if isinstance(K, GF):
        return rref_gf(K, M)
    R, piv = row_basis(K, M)
    out = np.empty(R.shape, dtype=object)
    for i in range(R.shape[0]):
        lead = R[i, piv[i]]
        for j in range(R.shape[1]):
            e = R[i, j]
            out[i, j] = RationalFunction(e, lead) if e else K.zero
    return out, piv


def rank_kernel(K, M) -> tuple[int, list[np.ndarray]]:
    """Rank of ``M`` and a basis of its right kernel ``{v : M v = 0}``."""
    M = np.asarray(M, dtype=np.int64 if isinstance(K, GF) else object)
    if M.ndim != 2:
        raise ValueError("expected a 2-d matrix")
    ncols = M.shape[1]
    if M.shape[0] == 0:
        R, piv = (np.zeros((0, ncols), dtype=M.dtype), [])
    else:
        R, piv = rref(K, M)
    if isinstance(K, GF):
        kern = _kernel_from_rref(0, R, piv, ncols, K.neg, 1)
        kern = [np.asarray(v, dtype=np.int64) for v in kern]
    else:
        kern = _kernel_from_rref(K.zero, R, piv, ncols, lambda e: -e, K.one)
    return len(piv), kern


def rank(K, M) -> int:
    M = np.asarray(M, dtype=np.int64 if isinstance(K, GF) else object)
    if M.size == 0:
        return 0
    if isinstance(K, GF):
        return len(rref_gf(K, M)[1])
    return len(row_basis(K, M)[1])


def matvec(K, M, v):
    """``M @ v`` over ``K``."""
    if isinstance(K, GF):
        return K.matmul(np.asarray(M, dtype=np.int64), np.asarray(v, dtype=np.int64).reshape(-1, 1))[:, 0]
    M = np.asarray(M, dtype=object)
    out = np.empty(M.shape[0], dtype=object)
    for i in range(M.shape[0]):
        acc = K.zero
        for j in range(M.shape[1]):
            a, b = M[i, j], v[j]
            if a and b:
                acc = acc + a * b
        out[i] = acc
    return out


def poly_matmul(A, B, zero: UPoly):
    """Product of object matrices over F_q[c], exploiting zeros in ``B``."""
    A = np.asarray(A, dtype=object)
    B = np.asarray(B, dtype=object)
    out = np.empty((A.shape[0], B.shape[1]), dtype=object)
    out[:] = zero
    cols = [[(i, B[i, j]) for i in range(B.shape[0]) if B[i, j]] for j in range(B.shape[1])]
    for r in range(A.shape[0]):
        arow = A[r]
        for j, nz in enumerate(cols):
            acc = zero
            for i, b in nz:
                a = arow[i]
                if a:
                    acc = acc + a * b
            out[r, j] = acc
    return out


def check_same_field(*fields):
    first = fields[0]
    for f in fields[1:]:
        if f != first:
            raise FieldMismatch(f"{first!r} vs {f!r}")
