import pytest

from cherednik.fields import gf
from cherednik.groups import dihedral_group, make_tau, symmetric_group
from cherednik.polys import (ArityMismatch, DegreeMismatch, Poly, VermaVector, coords,
                             divided_difference, enumerate_basis, from_coords, group_act,
                             parse_poly, parse_vector, partial)


def P(text, p=5, n=3):
    return parse_poly(text, gf(p), n)


def test_frobenius_in_char_two():
    f = P("x1 + x2", p=2, n=2)
    assert f * f == P("x1^2 + x2^2", p=2, n=2)


def test_difference_of_squares():
    assert P("x1 - x2") * P("x1 + x2") == P("x1^2 - x2^2")


def test_cubic_part_of_product():
    f = P("1 - x1") * P("1 - x2") * P("1 - x3")
    assert f.graded_component(3) == P("-x1*x2*x3")


def test_partials():
    assert partial(P("x1^5"), 0).is_zero()
    assert partial(P("x1^2*x2"), 0) == P("2*x1*x2")
    assert partial(P("x1^3"), 1).is_zero()


def test_arity_mismatch():
    with pytest.raises(ArityMismatch):
        P("x1", n=2) + P("x1", n=3)


def test_divided_difference_symmetric_group():
    G = symmetric_group(3, 5)
    s12 = next(s for s in G.reflections if s.swap and {s.swap[0], s.swap[1]} == {0, 1})
    assert divided_difference(P("x1^2"), s12) == P("x1 + x2")
    assert divided_difference(P("x1*x2 + x3"), s12).is_zero()


def test_divided_difference_dihedral_geometric_sum():
    p, m = 2, 7
    G = dihedral_group(m, p)
    F, z = G.field, G.zeta
    for k, s in enumerate(G.reflections):
        f = parse_poly(f"x1^{p}", F, 2)
        expected = Poly(F, 2, {(p - 1 - l, l): F.pow(z, k * l) for l in range(p)})
        assert divided_difference(f, s) == expected


def test_group_action_examples():
    G = symmetric_group(3, 5)
    s12 = next(i for i, s in enumerate(G.reflections) if {s.swap[0], s.swap[1]} == {0, 1})
    v = VermaVector([P("x1")])
    out = group_act(G.reflections[s12].matrix, [[1]], v, G.field)
    assert out == VermaVector([P("x2")])

    D = dihedral_group(7, 2)
    tau = make_tau(D, "rho:3")
    F, z = D.field, D.zeta
    for k, s in enumerate(D.reflections):
        one_e1 = VermaVector([Poly.const(F, 2, 1), Poly.zero(F, 2)])
        got = group_act(s.matrix, tau.matrices[k], one_e1, F)
        assert got == VermaVector([Poly.zero(F, 2), Poly.const(F, 2, F.pow(z, 3 * k))])


def test_basis_sizes():
    assert len(enumerate_basis(2, 1, 1).items) == 2
    assert len(enumerate_basis(3, 2, 1).items) == 6
    assert len(enumerate_basis(2, 1, 2).items) == 4


def test_coords_roundtrip_and_degree_check():
    F = gf(7)
    v = parse_vector("3*x1^2 (*) e1 + x1*x2 (*) e2", F, 2, 2)
    b = enumerate_basis(2, 2, 2)
    assert from_coords(coords(v, b), b, F) == v
    with pytest.raises(DegreeMismatch):
        coords(parse_vector("x1 (*) e1", F, 2, 2), b)


def test_printing_roundtrip():
    F = gf(5)
    f = P("3*x1^2*x2 + 4*x3 + 1")
    assert parse_poly(f.to_str(), F, 3) == f
