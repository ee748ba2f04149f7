"""Randomised exact property checks; every suite runs at least 50 instances."""
import random

import numpy as np
import pytest

from cherednik.contraform import _tower, beta_matrix, in_Jc
from cherednik.dunkl import DunklContext, apply_dunkl, check_algebra_relation
from cherednik.fields import (RationalFunction, RationalFunctionField, UPoly, embed,
                              evaluation_field, gf)
from cherednik.groups import dihedral_group, symmetric_group
from cherednik.linalg import evaluate_matrix, rank, rank_kernel, rref_gf
from cherednik.polys import VermaVector, coords, enumerate_basis, from_coords

INSTANCES = 60

# (family, size, p, tau) combinations kept small so generic-c runs stay fast
SETTINGS = [
    ("S", 2, 3, "trivial"), ("S", 3, 2, "trivial"), ("S", 3, 5, "trivial"), ("S", 3, 7, "trivial"),
    ("S", 4, 2, "trivial"), ("D", 3, 2, "trivial"), ("D", 5, 2, "rho:1"), ("D", 5, 2, "rho:2"),
    ("D", 7, 2, "rho:3"), ("D", 4, 3, "trivial"),
]

_CTX_CACHE = {}


def _context(setting, c):
    key = (setting, c if not isinstance(c, dict) else tuple(sorted(c.items())))
    if key not in _CTX_CACHE:
        fam, size, p, tau = setting
        G = symmetric_group(size, p) if fam == "S" else dihedral_group(size, p)
        _CTX_CACHE[key] = DunklContext(G, tau=tau, c=c)
    return _CTX_CACHE[key]


def random_context(rng):
    setting = rng.choice(SETTINGS)
    p = setting[2]
    if setting == ("D", 4, 3, "trivial"):
        c = {0: rng.randrange(p), 1: "generic"} if rng.random() < 0.5 else {0: 1, 1: 2}
    else:
        c = "generic" if rng.random() < 0.5 else rng.randrange(p)
    return _context(setting, c)


def random_scalar(ctx, rng):
    K = ctx.K
    q = ctx.base.q
    if ctx.generic:
        return K.add(K.from_base(rng.randrange(q)), K.mul(K.c, K.from_base(rng.randrange(q))))
    return rng.randrange(q)


def random_vector(ctx, rng, d):
    basis = enumerate_basis(ctx.n, d, ctx.dim_tau)
    K = ctx.K
    vals = [random_scalar(ctx, rng) if rng.random() < 0.6 else K.zero for _ in basis.items]
    return from_coords(vals, basis, K)


def _pair(ctx, v, w):
    """sum_i v_i w_i in K."""
    K = ctx.K
    acc = K.zero
    for a, b in zip(v, w):
        acc = K.add(acc, K.mul(a, b))
    return acc


# ---------------------------------------------------------------------------

def test_dunkl_operators_commute():
    rng = random.Random(101)
    for _ in range(INSTANCES):
        ctx = random_context(rng)
        v = random_vector(ctx, rng, rng.randint(2, 4))
        k, j = rng.sample(range(ctx.n), 2)
        lhs = apply_dunkl(ctx, k, apply_dunkl(ctx, j, v))
        rhs = apply_dunkl(ctx, j, apply_dunkl(ctx, k, v))
        assert lhs == rhs, (ctx, v.to_str(), k, j)


def test_commutation_relation():
    rng = random.Random(202)
    for _ in range(INSTANCES):
        ctx = random_context(rng)
        v = random_vector(ctx, rng, rng.randint(0, 3))
        k, j = rng.randrange(ctx.n), rng.randrange(ctx.n)
        assert check_algebra_relation(ctx, k, j, v), (ctx, v.to_str(), k, j)


def test_form_is_adjoint():
    """beta(v, y_k w) = beta(D_k v, w) on basis covectors w = y^B e_j*."""
    rng = random.Random(303)
    for _ in range(INSTANCES):
        ctx = random_context(rng)
        d = rng.randint(0, 3)
        v = random_vector(ctx, rng, d + 1)
        k = rng.randrange(ctx.n)
        big = beta_matrix(ctx, d + 1, order=rng.choice(["first", "last"]))
        small = beta_matrix(ctx, d)
        x_big = coords(v, big.row_basis)
        x_small = coords(apply_dunkl(ctx, k, v), small.row_basis)
        for col, (B, j) in enumerate(small.col_basis.items):
            Bk = B[:k] + (B[k] + 1,) + B[k + 1:]
            col_big = big.col_basis.index[(Bk, j)]
            lhs = _pair(ctx, x_big, [big.entry(i, col_big) for i in range(big.shape[0])])
            rhs = _pair(ctx, x_small, [small.entry(i, col) for i in range(small.shape[0])])
            assert lhs == rhs


def _random_J_element(ctx, rng, d):
    tower = _tower(ctx)
    E = tower.E(d)
    basis = enumerate_basis(ctx.n, d, ctx.dim_tau)
    if E.shape[0] == 0:
        return random_vector(ctx, rng, d)
    _, kern = rank_kernel(ctx.K, E)
    if not kern:
        return None
    K = ctx.K
    acc = [K.zero] * len(basis.items)
    for vec in kern:
        a = random_scalar(ctx, rng)
        acc = [K.add(x, K.mul(a, y)) for x, y in zip(acc, vec)]
    return from_coords(acc, basis, K)


def test_maximal_submodule_is_closed():
    """x_i J and D_k J stay inside J (checked through the beta route)."""
    rng = random.Random(404)
    done = 0
    while done < INSTANCES:
        ctx = random_context(rng)
        d = rng.randint(1, 4)
        v = _random_J_element(ctx, rng, d)
        if v is None or v.is_zero():
            continue
        assert in_Jc(ctx, v)
        i, k = rng.randrange(ctx.n), rng.randrange(ctx.n)
        assert in_Jc(ctx, v.times_var(i))
        assert in_Jc(ctx, apply_dunkl(ctx, k, v))
        done += 1


def test_quotient_ranks_agree_between_routes():
    rng = random.Random(505)
    for _ in range(INSTANCES):
        ctx = random_context(rng)
        d = rng.randint(0, 4)
        assert _tower(ctx).rank(d) == beta_matrix(ctx, d).rank()
        assert beta_matrix(ctx, d, "first").rank() == beta_matrix(ctx, d, "last").rank()


@pytest.mark.parametrize("p,k", [(2, 1), (2, 3), (3, 2), (5, 1), (7, 1), (2, 4)])
def test_finite_field_axioms(p, k):
    F = gf(p, k)
    rng = random.Random(p * 100 + k)
    for _ in range(INSTANCES):
        a, b, c = (rng.randrange(F.q) for _ in range(3))
        assert F.add(a, F.add(b, c)) == F.add(F.add(a, b), c)
        assert F.mul(a, F.mul(b, c)) == F.mul(F.mul(a, b), c)
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
        assert F.add(a, F.neg(a)) == 0 and F.add(a, 0) == a and F.mul(a, 1) == a
        assert F.mul(a, b) == F.mul(b, a)
        if a:
            assert F.mul(a, F.inv(a)) == 1
        assert F.pow(a, F.q) == a


def _random_rational(K, rng, p):
    num = UPoly(K.base, tuple(rng.randrange(p) for _ in range(rng.randint(1, 3))))
    den = UPoly(K.base, tuple(rng.randrange(p) for _ in range(rng.randint(1, 3))))
    if den.is_zero():
        den = UPoly(K.base, (1,))
    return RationalFunction(num, den)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_rational_function_axioms(p):
    K = RationalFunctionField(gf(p))
    rng = random.Random(900 + p)
    for _ in range(INSTANCES):
        a, b, c = (_random_rational(K, rng, p) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a - a == K.zero
        if not K.is_zero(a):
            assert a * K.inv(a) == K.one


def _random_upoly_matrix(F, rng, rows, cols, rank_cap):
    """Product of random factors, so the generic rank is at most ``rank_cap``."""
    def rnd():
        return UPoly(F, tuple(rng.randrange(F.p) for _ in range(rng.randint(1, 2))))
    A = [[rnd() for _ in range(rank_cap)] for _ in range(rows)]
    B = [[rnd() for _ in range(cols)] for _ in range(rank_cap)]
    M = np.empty((rows, cols), dtype=object)
    for i in range(rows):
        for j in range(cols):
            acc = UPoly(F)
            for t in range(rank_cap):
                acc = acc + A[i][t] * B[t][j]
            M[i, j] = acc
    return M


def test_generic_rank_matches_evaluations():
    """Rank over F_p(c) equals the largest rank over enough evaluation points."""
    rng = random.Random(606)
    for inst in range(INSTANCES):
        p = rng.choice([2, 3, 5])
        F = gf(p)
        rows, cols = rng.randint(1, 4), rng.randint(1, 4)
        M = _random_upoly_matrix(F, rng, rows, cols, rng.randint(1, 3))
        r = rank(RationalFunctionField(F), M)
        big = evaluation_field(F, min_size=64)
        emb = embed(F, big)
        # a nonzero r x r minor has c-degree at most 4r, so 4r + 1 points suffice
        ranks = [len(rref_gf(big, evaluate_matrix(M, pt, big, emb))[1])
                 for pt in range(min(big.q, 4 * max(r, 1) + 1))]
        assert max(ranks) == r
        assert all(x <= r for x in ranks)


def test_dunkl_matrix_rank_matches_evaluations():
    rng = random.Random(707)
    for _ in range(INSTANCES):
        setting = rng.choice(SETTINGS[:5])
        ctx = _context(setting, "generic")
        d = rng.randint(1, 3)
        M = ctx.stacked_dunkl(d)
        r = rank(ctx.K, M)
        big = evaluation_field(ctx.base, min_size=64)
        emb = embed(ctx.base, big)
        pts = rng.sample(range(big.q), 3)
        ranks = [len(rref_gf(big, evaluate_matrix(M, pt, big, emb))[1]) for pt in pts]
        assert all(x <= r for x in ranks)
        assert r in ranks
