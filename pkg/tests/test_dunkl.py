import pytest

from cherednik.dunkl import (DunklContext, apply_B, apply_dunkl, check_algebra_relation,
                            is_singular, matrix_apply)
from cherednik.fields import InvalidInput
from cherednik.groups import dihedral_group, symmetric_group
from cherednik.polys import Poly, VermaVector


def test_linear_values_generic():
    ctx = DunklContext(symmetric_group(3, 5))
    K = ctx.K
    c = K.c
    one = K.one
    for i in range(3):
        for j in range(3):
            got = apply_dunkl(ctx, i, ctx.poly(f"x{j + 1}"))
            want = one - c * K.from_int(2) if i == j else c
            assert got == VermaVector([Poly.const(K, 3, want)])


def test_degree_zero_is_killed():
    ctx = DunklContext(dihedral_group(7, 2), tau="rho:3")
    assert apply_dunkl(ctx, 0, ctx.vector("1 (*) e2")).is_zero()


def test_s2_square():
    ctx = DunklContext(symmetric_group(2, 5))
    assert apply_dunkl(ctx, 0, ctx.poly("x1^2")) == VermaVector([ctx.poly("2*x1 - c*x1 - c*x2")])


def test_dihedral_rho_a_kills_pth_powers():
    ctx = DunklContext(dihedral_group(7, 2), tau="rho:3")
    assert apply_dunkl(ctx, 0, ctx.vector("x1^2 (*) e1")).is_zero()


def test_singular_examples():
    ctx = DunklContext(symmetric_group(3, 5), c=2)
    assert is_singular(ctx, ctx.poly("x1 - x2"))
    ctx = DunklContext(symmetric_group(4, 2))
    assert is_singular(ctx, ctx.poly("x1^2 + x2^2 + x3^2 + x4^2"))
    assert is_singular(ctx, ctx.poly("c*x1^2 + c*x1*x2 + c*x1*x3 + c*x1*x4 + c*x2*x1 + c*x2^2"
                                     " + c*x2*x3 + c*x2*x4 + x1^2 + x2^2"))
    generic = DunklContext(symmetric_group(3, 5))
    assert not is_singular(generic, generic.poly("x1"))


def test_B_operator():
    ctx = DunklContext(symmetric_group(3, 5), c=0)
    assert apply_B(ctx, 0, ctx.poly("x2")) == ctx.poly("-1")
    assert apply_B(ctx, 1, ctx.poly("x1*x2*x3 + x1^2 + x2^2 + x3^2")).is_zero()
    # B_1 F_0 for F_0 = sum a_i x_i^p
    p, a = 5, [1, 3, 0]
    f = ctx.poly(" + ".join(f"{a[i]}*x{i + 1}^{p}" for i in range(3)))
    terms = []
    for j in (1, 2):
        for r in range(p):
            terms.append(f"{(a[0] - a[j]) % p}*x1^{r}*x{j + 1}^{p - 1 - r}")
    assert apply_B(ctx, 0, f) == ctx.poly(" + ".join(terms))
    with pytest.raises(InvalidInput):
        apply_B(DunklContext(dihedral_group(5, 2)), 0, Poly.zero(dihedral_group(5, 2).field, 2))


def test_relation_examples():
    ctx = DunklContext(symmetric_group(2, 5))
    one = ctx.poly("1")
    assert check_algebra_relation(ctx, 0, 0, one)
    assert apply_dunkl(ctx, 0, ctx.poly("x1")) == VermaVector([ctx.poly("1 - c")])
    ctx0 = DunklContext(symmetric_group(3, 5), c=0)
    assert check_algebra_relation(ctx0, 0, 1, ctx0.poly("x1^2*x3 + 2*x2"))
    ctx3 = DunklContext(dihedral_group(3, 2))
    assert check_algebra_relation(ctx3, 0, 1, ctx3.poly("x1^2 + x1*x2"))


def test_matrix_path_agrees():
    ctx = DunklContext(dihedral_group(5, 2), tau="rho:1")
    v = ctx.vector("x1^3 (*) e1 + x1*x2^2 (*) e2")
    for k in range(2):
        assert matrix_apply(ctx, k, v) == apply_dunkl(ctx, k, v)


def test_class_parameters():
    G = dihedral_group(4, 3)
    ctx = DunklContext(G, c={0: 1, 1: "generic"})
    assert ctx.generic
    with pytest.raises(InvalidInput):
        DunklContext(G, c={0: 1})
