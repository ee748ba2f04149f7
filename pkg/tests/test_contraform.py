import pytest

from cherednik.contraform import (beta_matrix, generator_counts_bruteforce, hilbert_L, in_Jc,
                                  min_generator_degrees, series_from_factors, singular_space,
                                  taylor_construction_G)
from cherednik.dunkl import DunklContext, is_singular
from cherednik.fields import InvalidInput
from cherednik.groups import dihedral_group, symmetric_group


def S(n, p, c="generic"):
    return DunklContext(symmetric_group(n, p), c=c)


def test_beta_low_degrees():
    ctx = S(2, 5)
    assert beta_matrix(ctx, 0).to_rows() == [["1"]]
    K = ctx.K
    B = beta_matrix(ctx, 1)
    one_minus_c, c = K.one - K.c, K.c
    assert [[B.entry(i, j) for j in range(2)] for i in range(2)] == [[one_minus_c, c], [c, one_minus_c]]


def test_hilbert_examples():
    assert hilbert_L(S(3, 5, 0), 20).coefficients == [1, 3, 6, 10, 15, 18, 19, 18, 15, 10, 6, 3, 1]
    h = hilbert_L(S(3, 5, 2), 20)
    assert h.coefficients == [1] * 5 and h.complete
    assert hilbert_L(S(2, 2), 10).coefficients == [1, 2, 2, 2, 1]


def test_incomplete_series_flagged():
    h = hilbert_L(S(3, 5, 0), 6)
    assert not h.complete
    assert h.ci_degrees() is None


def test_methods_agree():
    for ctx in (S(3, 5, 1), S(2, 3), DunklContext(dihedral_group(5, 2), tau="rho:1")):
        assert hilbert_L(ctx, 30).coefficients == hilbert_L(ctx, 30, method="beta").coefficients


def test_singular_space_examples():
    sp = singular_space(S(3, 5, 2), 1)
    assert sp.dim == 2
    ctx = S(4, 2)
    sp = singular_space(ctx, 2)
    assert sp.dim == 3
    assert all(is_singular(ctx, v) for v in sp.basis)
    assert singular_space(S(3, 5), 1).dim == 0


def test_in_Jc_examples():
    ctx = DunklContext(dihedral_group(7, 2), tau="rho:2")
    assert in_Jc(ctx, ctx.vector("x1^6 (*) e2"))
    assert not in_Jc(S(3, 5, 1), S(3, 5, 1).poly("1"))
    ctx = S(4, 2)
    assert in_Jc(ctx, ctx.poly("x1^4"))
    assert in_Jc(ctx, ctx.poly("x1^4"), method="tower")


@pytest.mark.parametrize("n,p,c,expected", [(3, 5, 0, [5, 5, 5]), (2, 2, "generic", [2, 4]),
                                            (3, 5, 1, [5, 8, 8])])
def test_min_generator_examples(n, p, c, expected):
    ctx = S(n, p, c)
    assert min_generator_degrees(ctx, 40) == expected
    brute = generator_counts_bruteforce(ctx, 40)
    assert sorted(d for d, k in brute.items() for _ in range(k)) == expected


def test_taylor_construction():
    G = taylor_construction_G(5, 1)
    assert sorted(g.degree() for g in G) == [5, 8, 8]
    ctx = S(3, 5, 1)
    assert all(is_singular(ctx, g) for g in G)
    G = taylor_construction_G(S(3, 7, 3), 3)
    assert sorted(g.degree() for g in G) == [2, 2, 7]
    with pytest.raises(InvalidInput):
        taylor_construction_G(7, 0)


def test_series_factors():
    assert series_from_factors([2, 2], 2) == [1, 2, 1]
    h = hilbert_L(S(3, 7, 3), 60)
    assert h.ci_degrees() == [2, 2, 7]
    assert h.is_palindromic()
