import pytest
from hypothesis import given, settings, strategies as st

from cherednik.fields import (DivisionByZero, FieldElem, FieldMismatch, InvalidInput,
                              RationalFunctionField, UPoly, embed, find_irreducible, gf,
                              primitive_mth_root)


def test_inverse_in_prime_field():
    assert gf(5).inv(2) == 3
    assert FieldElem(gf(5), 2) * 3 == FieldElem(gf(5), 1)


def test_inverse_in_f8_matches_brute_force():
    F = gf(2, 3)
    assert F.modulus == (1, 1, 0, 1)
    z = F.parse("z")
    inv = F.inv(z)
    assert F.to_str(inv) == "(z^2+1)"
    brute = [b for b in range(1, 8) if F.mul(z, b) == 1]
    assert brute == [inv]


def test_rational_function_sum_reduces():
    K = RationalFunctionField(gf(3))
    s = K.parse("(c+1)/c") + K.parse("(c-1)/c")
    assert s == K.from_int(2)


@pytest.mark.parametrize("p,d,expected", [(2, 1, (0, 1)), (2, 3, (1, 1, 0, 1)), (5, 1, (0, 1))])
def test_find_irreducible(p, d, expected):
    assert find_irreducible(p, d) == expected


def test_primitive_roots():
    F, z = primitive_mth_root(2, 7)
    assert F.q == 8
    assert F.pow(z, 7) == 1 and all(F.pow(z, e) != 1 for e in range(1, 7))
    F, z = primitive_mth_root(5, 4)
    assert (F.q, z) == (5, 2)
    F, z = primitive_mth_root(3, 2)
    assert (F.q, z) == (3, 2)


def test_primitive_root_rejects_multiple_of_p():
    with pytest.raises(InvalidInput):
        primitive_mth_root(3, 6)


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        gf(7).inv(0)
    K = RationalFunctionField(gf(5))
    with pytest.raises(DivisionByZero):
        K.div(K.one, K.zero)


def test_mixed_fields_rejected():
    with pytest.raises(FieldMismatch):
        FieldElem(gf(5), 1) + FieldElem(gf(7), 1)


def test_embedding_is_a_homomorphism():
    small, big = gf(2, 2), gf(2, 4)
    e = embed(small, big)
    for a in range(4):
        for b in range(4):
            assert e(small.mul(a, b)) == big.mul(e(a), e(b))
            assert e(small.add(a, b)) == big.add(e(a), e(b))


def test_upoly_gcd_and_division():
    F = gf(5)
    f = UPoly(F, (1, 1)) * UPoly(F, (2, 1))    # (c+1)(c+2)
    g = UPoly(F, (1, 1)) * UPoly(F, (3, 0, 1))
    h = f.gcd(g)
    assert h == UPoly(F, (1, 1))
    assert f.exact_div(h) == UPoly(F, (2, 1))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 15), st.integers(0, 15), st.integers(1, 15))
def test_f16_division_roundtrip(a, b, c):
    F = gf(2, 4)
    assert F.mul(F.div(a, c), c) == a
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))


def test_parse_and_print_roundtrip():
    K = RationalFunctionField(gf(7))
    for text in ["c", "3*c^2+1", "(c+1)/(c^2+3)", "0"]:
        v = K.parse(text)
        assert K.parse(K.to_str(v)) == v
