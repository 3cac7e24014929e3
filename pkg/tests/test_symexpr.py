from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hookzeta.partition import hook, partitions_of
from hookzeta.symexpr import (
    BasisMismatch,
    SymExpr,
    add,
    e,
    equal,
    h,
    hook_to_he,
    jacobi_trudi,
    jacobi_trudi_sequence,
    multiply,
    p,
    s,
    scale,
    to_h_basis,
    to_s_basis,
)

from oracles import POINTS, evaluate


def test_add_and_scale():
    assert add(2 * h(2), -2 * h(2)).is_zero()
    assert scale(h(2, 1), 0).is_zero()
    two = add(s(3), -s(1, 1, 1))
    assert two.basis == "s" and len(two) == 2


def test_add_rejects_mixed_bases():
    with pytest.raises(BasisMismatch):
        add(h(1), p(1))


def test_multiply_examples():
    assert multiply(h(2), h(1)) == h(2, 1)
    assert multiply(p(2), p(2, 1)) == p(2, 2, 1)
    assert multiply(h(2) - h(1, 1), h(1)) == h(2, 1) - h(1, 1, 1)


def test_schur_products_are_rejected():
    with pytest.raises(ValueError):
        multiply(s(1), s(1))


def test_non_partition_schur_index_rejected():
    with pytest.raises(ValueError):
        s(1, 2)
    with pytest.raises(ValueError):
        SymExpr("s", {(1, 2): 1})


def test_to_h_basis_examples():
    assert to_h_basis(s(2, 1)) == h(2, 1) - h(3)
    assert to_h_basis(p(2)) == 2 * h(2) - h(1, 1)
    assert to_h_basis(e(2)) == h(1, 1) - h(2)


def test_generators_of_degree_zero_are_one():
    assert e(0) == SymExpr.one("e")
    assert to_h_basis(e(0)) == SymExpr.one("h")
    assert to_h_basis(s()) == SymExpr.one("h")


def test_hook_to_he_examples():
    assert hook_to_he(3, 0) == h(3)
    assert hook_to_he(2, 1) == h(2, 1) - h(3)
    # e_3 = h_1^3 - 2 h_2 h_1 + h_3
    assert hook_to_he(1, 2) == h(1, 1, 1) - 2 * h(2, 1) + h(3)
    assert hook_to_he(1, 2) == to_h_basis(s(1, 1, 1))


def test_equal_examples():
    assert equal(p(1), h(1))
    assert equal(s(2) + s(1, 1), h(1, 1))
    assert not equal(p(2), h(2))


@pytest.mark.parametrize("n", range(1, 8))
def test_jacobi_trudi_against_bialternant(n):
    for lam in partitions_of(n):
        expansion = jacobi_trudi(lam)
        for xs in POINTS:
            assert evaluate(expansion, xs) == evaluate(s(lam), xs), lam


@pytest.mark.parametrize("n", range(1, 8))
def test_newton_and_elementary_against_direct_evaluation(n):
    xs = POINTS[0][:n]
    assert evaluate(to_h_basis(p(n)), xs) == evaluate(p(n), xs)
    assert evaluate(to_h_basis(e(n)), xs) == evaluate(e(n), xs)


@pytest.mark.parametrize("n", range(1, 13))
def test_elementary_complete_recurrence(n):
    # sum_k (-1)^k e_k h_{n-k} = 0
    total = SymExpr.zero("h")
    for k in range(n + 1):
        total = total + (-1) ** k * multiply(to_h_basis(e(k)), h(n - k))
    assert total.is_zero()


@pytest.mark.parametrize("n", range(1, 13))
def test_power_sum_is_alternating_hook_sum(n):
    rhs = SymExpr("s", {hook(n - i, i): (-1) ** i for i in range(n)})
    assert equal(p(n), rhs)


def test_hook_to_he_matches_jacobi_trudi_all_hooks():
    for size in range(1, 13):
        for a in range(1, size + 1):
            assert hook_to_he(a, size - a) == jacobi_trudi(hook(a, size - a))


@pytest.mark.parametrize("n", range(1, 13))
def test_power_sum_double_sum(n):
    total = SymExpr.zero("h")
    for i in range(n):
        for j in range(i + 1):
            total = total + (-1) ** (i + j) * multiply(h(n - i + j), to_h_basis(e(i - j)))
    assert equal(p(n), total)


def test_two_row_straightening():
    assert jacobi_trudi_sequence((1, 2)).is_zero()
    assert jacobi_trudi_sequence((1, 3)) == -jacobi_trudi((2, 2))


small_partitions = st.integers(0, 4).flatmap(lambda n: st.sampled_from(partitions_of(n)))
coefficients = st.fractions(min_value=-5, max_value=5, max_denominator=4)


def expressions(basis):
    return st.dictionaries(small_partitions, coefficients, max_size=3).map(lambda d: SymExpr(basis, d))


mult_basis = st.sampled_from(["e", "h", "p"])


@settings(max_examples=40, deadline=None)
@given(mult_basis.flatmap(lambda b: st.tuples(expressions(b), expressions(b), expressions(b))))
def test_multiply_commutative_associative(triple):
    a, b, c = triple
    assert multiply(a, b) == multiply(b, a)
    assert multiply(multiply(a, b), c) == multiply(a, multiply(b, c))


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(["e", "h", "p", "s"]).flatmap(lambda b: st.tuples(expressions(b), expressions(b))))
def test_to_h_basis_is_linear(pair):
    a, b = pair
    assert to_h_basis(a + b) == to_h_basis(a) + to_h_basis(b)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(["e", "h", "p", "s"]).flatmap(expressions))
def test_schur_conversion_roundtrip(a):
    assert to_h_basis(to_s_basis(a)) == to_h_basis(a)


@given(st.sampled_from(["e", "h", "p", "s"]).flatmap(expressions))
def test_json_roundtrip(a):
    assert SymExpr.from_json(a.to_json()) == a


def test_json_layout():
    data = (-Fraction(1, 3) * h(2, 1) + h(3)).to_dict()
    assert data == {"basis": "h", "terms": [{"index": [3], "coeff": "1"}, {"index": [2, 1], "coeff": "-1/3"}]}


def test_latex_rendering():
    assert (s(3) - s(1, 1, 1)).to_latex() == "s_{(3)} - s_{(1,1,1)}"
    assert (Fraction(1, 2) * h(2)).to_latex() == r"\frac{1}{2}h_{(2)}"


def test_immutability():
    x = h(1)
    with pytest.raises(AttributeError):
        x.basis = "e"
