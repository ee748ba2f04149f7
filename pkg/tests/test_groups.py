import pytest

from cherednik.fields import InvalidInput
from cherednik.groups import (dihedral_group, from_descriptor, make_tau, mat_mul, parse_group,
                              symmetric_group)


def test_symmetric_group_reflections():
    assert len(symmetric_group(3, 5).reflections) == 3
    G = symmetric_group(4, 2)
    assert len(G.reflections) == 6
    assert {s.class_id for s in G.reflections} == {0}
    assert len(G.elements()) == 24


def test_root_is_minus_one_eigenvector():
    G = symmetric_group(3, 7)
    F = G.field
    for s in G.reflections:
        image = [sum(F.mul(s.matrix[i][j], s.alpha[j]) for j in range(3)) % F.p for i in range(3)]
        assert image == [F.neg(a) for a in s.alpha]


def test_dihedral_fields_and_classes():
    G = dihedral_group(5, 2)
    assert (G.field.q, len(G.reflections), G.num_classes) == (16, 5, 1)
    assert len(G.elements()) == 10
    G = dihedral_group(4, 3)
    assert G.num_classes == 2
    assert [s.class_id for s in G.reflections] == [k % 2 for k in range(4)]


def test_dihedral_root_eigenvector_and_involution():
    G = dihedral_group(7, 2)
    F = G.field
    for s in G.reflections:
        sa = [F.add(F.mul(s.matrix[i][0], s.alpha[0]), F.mul(s.matrix[i][1], s.alpha[1])) for i in range(2)]
        assert sa == [F.neg(a) for a in s.alpha]
        assert [list(r) for r in mat_mul(F, s.matrix, s.matrix)] == [[1, 0], [0, 1]]


def test_dihedral_rejects_p_dividing_m():
    with pytest.raises(InvalidInput):
        dihedral_group(6, 3)


def test_tau_examples():
    assert make_tau(symmetric_group(4, 2), "trivial").dim == 1
    D = dihedral_group(7, 2)
    tau = make_tau(D, "rho:3")
    assert tau.dim == 2
    F, z = D.field, D.zeta
    for k, M in enumerate(tau.matrices):
        assert [M[0][0], M[1][0]] == [0, F.pow(z, 3 * k)]
    with pytest.raises(InvalidInput):
        make_tau(D, "rho(4)")
    with pytest.raises(InvalidInput):
        make_tau(symmetric_group(3, 5), "rho:1")


def test_tau_is_a_representation_on_products():
    # s_i s_j s_i is a reflection; the representation must respect that product
    D = dihedral_group(5, 2)
    tau = make_tau(D, "rho:1")
    F = D.field
    refl = {tuple(map(tuple, s.matrix)): k for k, s in enumerate(D.reflections)}
    for i, si in enumerate(D.reflections):
        for j, sj in enumerate(D.reflections):
            g = mat_mul(F, mat_mul(F, si.matrix, sj.matrix), si.matrix)
            k = refl[tuple(map(tuple, g))]
            t = mat_mul(F, mat_mul(F, tau.matrices[i], tau.matrices[j]), tau.matrices[i])
            assert t == tau.matrices[k]


def test_descriptor_roundtrip():
    for G in (symmetric_group(3, 5), dihedral_group(7, 2)):
        H = from_descriptor(G.descriptor())
        assert H.name() == G.name()
        assert [s.matrix for s in H.reflections] == [s.matrix for s in G.reflections]
    assert parse_group("Dm:7", 2).name() == dihedral_group(7, 2).name()
    with pytest.raises(InvalidInput):
        parse_group("Xn:3", 5)
