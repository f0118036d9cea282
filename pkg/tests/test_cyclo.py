"""Exact cyclotomic arithmetic: examples, canonical form, field axioms."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zmodular.cyclo import (
    CycloDivisionError,
    CycloError,
    CycNum,
    arith,
    conjugate,
    cyclotomic_polynomial,
    embed,
    root_of_unity,
)


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


def test_root_of_unity_examples():
    assert root_of_unity(1, 0) == 1
    assert root_of_unity(4, 2) == -1
    assert root_of_unity(3, 1) + root_of_unity(3, 2) == -1
    assert root_of_unity(5, 7) == root_of_unity(5, 2)


def test_root_of_unity_rejects_zero_conductor():
    with pytest.raises(CycloError):
        root_of_unity(0)


def test_arith_examples():
    z5 = root_of_unity(5)
    assert arith(z5, z5**4, "mul") == 1
    assert arith(CycNum.one(3), root_of_unity(3), "div") == root_of_unity(3, 2)
    z7 = root_of_unity(7)
    sqrt_m7 = z7 + z7**2 - z7**3 + z7**4 - z7**5 - z7**6
    assert sqrt_m7 * sqrt_m7 == -7


def test_division_by_zero_distinct_error():
    with pytest.raises(CycloDivisionError):
        CycNum.one(3) / CycNum.zero(3)


def test_embed_examples():
    z3 = root_of_unity(3)
    assert embed(z3, 6) == root_of_unity(6, 2)
    assert embed(CycNum.one(1), 28) == 1
    golden = embed(root_of_unity(5) + root_of_unity(5, 4), 20)
    assert abs(golden.to_complex() - 0.6180339887498949) < 1e-9
    with pytest.raises(CycloError):
        embed(z3, 28)


def test_conjugate_examples():
    z4 = root_of_unity(4)
    assert conjugate(z4) == root_of_unity(4, 3)
    assert conjugate(z4) == -z4
    r = CycNum.from_rational(Fraction(7, 3), 5)
    assert conjugate(r) == r
    z7 = root_of_unity(7)
    sqrt_m7 = z7 + z7**2 - z7**3 + z7**4 - z7**5 - z7**6
    assert conjugate(sqrt_m7) == -sqrt_m7


def test_canonical_form_unique():
    # 1 + z + z^2 at conductor 3 is zero in canonical form
    x = CycNum(3, [1, 1, 1])
    assert x.is_zero()
    assert x.canonical() == (Fraction(0),) * 3
    a = root_of_unity(12, 4)
    b = root_of_unity(3).embed(12)
    assert a.canonical() == b.canonical()
    assert hash(a) == hash(b)


def test_serialization_round_trip():
    x = root_of_unity(12, 7) * Fraction(3, 5) + 2
    data = x.to_dict()
    assert data["conductor"] == 12
    assert CycNum.from_dict(data) == x


def test_describe():
    assert CycNum.zero(4).describe() == "0"
    assert (root_of_unity(3) * Fraction(1, 2)).describe() == "1/2*z3"


small_rational = st.fractions(
    min_value=-4, max_value=4, max_denominator=6
)


def cycnums(conductor):
    return st.lists(small_rational, min_size=0, max_size=conductor).map(
        lambda cs: CycNum(conductor, cs)
    )


@settings(max_examples=120, deadline=None)
@given(st.integers(1, 12).flatmap(lambda n: st.tuples(cycnums(n), cycnums(n), cycnums(n))))
def test_field_axioms(triple):
    a, b, c = triple
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    if not a.is_zero():
        assert a * a.inverse() == 1


@settings(max_examples=120, deadline=None)
@given(st.integers(1, 12).flatmap(lambda n: st.tuples(cycnums(n), cycnums(n))))
def test_conjugation_ring_homomorphism(pair):
    a, b = pair
    assert a.conjugate().conjugate() == a
    assert (a + b).conjugate() == a.conjugate() + b.conjugate()
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 8).flatmap(lambda n: st.tuples(cycnums(n), cycnums(n), st.sampled_from([2, 3, 4]))))
def test_embed_preserves_arithmetic(args):
    a, b, factor = args
    m = a.conductor * factor
    assert embed(a + b, m) == embed(a, m) + embed(b, m)
    assert embed(a * b, m) == embed(a, m) * embed(b, m)
    assert (embed(a, m) == embed(b, m)) == (a == b)


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 12).flatmap(cycnums))
def test_float_evaluation_matches_canonical(a):
    direct = a.to_complex()
    canonical = CycNum(a.conductor, a.canonical()).to_complex()
    assert abs(direct - canonical) < 1e-9
