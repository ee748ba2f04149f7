import numpy as np

from cherednik.fields import RationalFunction, RationalFunctionField, UPoly, gf
from cherednik.linalg import evaluated_rank, rank, rank_kernel, rref_gf


def _generic(F, rows):
    """Matrix of UPoly entries from nested tuples of coefficient lists."""
    M = np.empty((len(rows), len(rows[0])), dtype=object)
    for i, row in enumerate(rows):
        for j, coeffs in enumerate(row):
            M[i, j] = UPoly(F, tuple(x % F.p for x in coeffs))
    return M


def test_identity_rank():
    r, kern = rank_kernel(gf(5), np.eye(3, dtype=np.int64))
    assert r == 3 and kern == []


def test_rank_one_kernel():
    F = gf(5)
    r, kern = rank_kernel(F, np.array([[3, 3], [3, 3]], dtype=np.int64))
    assert r == 1
    assert len(kern) == 1
    v = np.asarray(kern[0], dtype=np.int64)
    assert not F.matmul(np.array([[3, 3]]), v.reshape(-1, 1)).any()


def test_s2_form_matrix_generic_and_special():
    F = gf(5)
    K = RationalFunctionField(F)
    M = _generic(F, [[(1, -1), (0, 1)], [(0, 1), (1, -1)]])     # [[1-c, c], [c, 1-c]]
    assert rank(K, M) == 2
    # at c = 3 (= 1/2 in F_5) both rows equal (3, 3)
    assert rank(F, np.array([[3, 3], [3, 3]], dtype=np.int64)) == 1


def test_generic_rank_deficient_kernel():
    F = gf(3)
    K = RationalFunctionField(F)
    # third row = c * first + second
    M = _generic(F, [[(1,), (0, 1), (2,)], [(0, 1), (1,), (1, 1)], [(0, 2), (1, 0, 1), (1,)]])
    r, kern = rank_kernel(K, M)
    assert r == 2 and len(kern) == 1
    for row in M:
        acc = K.zero
        for e, x in zip(row, kern[0]):
            acc = acc + RationalFunction(e) * x
        assert K.is_zero(acc)


def test_evaluated_rank_agrees():
    F = gf(2)
    M = _generic(F, [[(1, 1), (0, 1)], [(0, 1), (1, 1)]])
    assert evaluated_rank(M, F) == rank(RationalFunctionField(F), M) == 2


def test_rref_over_extension():
    F = gf(2, 3)
    A = np.array([[1, 2, 3], [2, 4, 6]], dtype=np.int64)
    A[1] = F.vmul(np.full(3, 2, dtype=np.int64), A[0])
    R, piv = rref_gf(F, A)
    assert piv == [0]
    assert R[0, 0] == 1
