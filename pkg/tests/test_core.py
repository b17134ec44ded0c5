"""Unit tests for the monomial calculus engine."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fiblie.basis import enumerate_W_upto
from fiblie.core import (
    IndexCeilingError,
    MonomialLimitError,
    RING_ONE,
    RING_ZERO,
    ZERO,
    apply,
    bracket,
    element,
    format_element,
    format_ring_element,
    is_basis_monomial,
    monomial,
    parse_element,
    pivot_action,
    pivot_bracket,
    power_2k,
    ring_monomial,
    square,
    tau,
    v,
)

W8 = [m for level in enumerate_W_upto(8, "restricted") for m in level]

elements = st.lists(st.sampled_from(W8), min_size=0, max_size=3).map(element)
ring_elems = st.lists(
    st.lists(st.integers(0, 9), max_size=3).map(lambda ix: ring_monomial(set(ix))),
    max_size=3,
).map(frozenset)


def test_pivot_bracket_examples():
    assert format_element(pivot_bracket(1, 2)) == "v3"
    assert pivot_bracket(3, 3) == ZERO
    assert format_element(pivot_bracket(1, 4)) == "t0*t1*v5"
    assert pivot_bracket(4, 1) == pivot_bracket(1, 4)


def test_fibonacci_recursion():
    for i in range(1, 31):
        assert pivot_bracket(i, i + 1) == v(i + 2)


def test_pivot_action_examples():
    assert pivot_action(2, 2) == RING_ONE
    assert pivot_action(5, 3) == RING_ZERO
    assert pivot_action(1, 3) == frozenset({ring_monomial({0, 1})})


def test_apply_examples():
    t2 = frozenset({ring_monomial({2})})
    assert apply(v(1), frozenset({ring_monomial({3})})) == frozenset(
        {ring_monomial({0, 1})}
    )
    assert apply(v(2), frozenset({ring_monomial({0})})) == RING_ZERO
    assert format_ring_element(apply(v(1) + v(2), t2)) == "1 + t0"


def test_bracket_examples():
    assert bracket(v(1), v(2)) == v(3)
    assert bracket(v(3), v(3)) == ZERO
    assert format_element(bracket(v(2), parse_element("t0*v4"))) == "t0*t1*v5"


def test_square_examples():
    assert format_element(square(v(1))) == "t0*v3"
    assert square(parse_element("t0*v3")) == ZERO
    assert square(v(1) + v(2)) == parse_element("v3 + t0*v3 + t1*v4")


def test_power_examples():
    assert power_2k(v(1), 2) == ZERO
    assert power_2k(v(1), 0) == v(1)
    assert power_2k(v(1), 1) == parse_element("t0*v3")


def test_power_cap():
    with pytest.raises(MonomialLimitError):
        power_2k(element(W8[:20]), 3, limit=2)


def test_tau_examples():
    assert tau(v(1), 1) == v(2)
    assert tau(parse_element("t0*v4"), 2) == parse_element("t2*v6")
    assert tau(ZERO, 5) == ZERO


def test_tau_is_bracket_homomorphism():
    a = parse_element("t0*v4 + v3")
    b = parse_element("t1*v5 + v2")
    assert tau(bracket(a, b), 3) == bracket(tau(a, 3), tau(b, 3))
    assert tau(square(a), 3) == square(tau(a, 3))


def test_is_basis_monomial():
    assert is_basis_monomial(monomial(5, [0])) == "standard"
    assert is_basis_monomial(monomial(3, [0])) == "square"
    assert is_basis_monomial(monomial(3, [1])) == "non-basis"
    assert is_basis_monomial(monomial(1)) == "standard"
    assert is_basis_monomial(monomial(7, [4])) == "square"


def test_index_ceiling():
    with pytest.raises(IndexCeilingError):
        monomial(4, [200])
    with pytest.raises(IndexCeilingError):
        tau(parse_element("t100*v200"), 30)
    with pytest.raises(IndexCeilingError):
        pivot_bracket(1, 200)


def test_canonical_order_and_roundtrip():
    e = parse_element("t1*v4 + v3 + t0*t1*v5")
    assert format_element(e) == "v3 + t1*v4 + t0*t1*v5"
    assert parse_element(format_element(e)) == e


def test_parse_rejects_malformed():
    for bad in ("t0v3", "v", "t0*t0*v4", "v0 x"):
        with pytest.raises(ValueError):
            parse_element(bad)


@settings(max_examples=300, deadline=None)
@given(elements)
def test_alternation(e):
    assert bracket(e, e) == ZERO


@settings(max_examples=300, deadline=None)
@given(elements, elements, elements)
def test_jacobi(a, b, c):
    total = (
        bracket(bracket(a, b), c)
        + bracket(bracket(b, c), a)
        + bracket(bracket(c, a), b)
    )
    assert total == ZERO


@settings(max_examples=300, deadline=None)
@given(elements, elements)
def test_restricted_identity(a, b):
    assert bracket(square(a), b) == bracket(a, bracket(a, b))


@settings(max_examples=200, deadline=None)
@given(elements, elements, st.integers(0, 4))
def test_shift_homomorphism(a, b, k):
    assert tau(bracket(a, b), k) == bracket(tau(a, k), tau(b, k))
    assert tau(square(a), k) == square(tau(a, k))


@settings(max_examples=200, deadline=None)
@given(elements, elements)
def test_closure_of_basis_span(a, b):
    for m in bracket(a, b).monomials | square(a).monomials:
        assert is_basis_monomial(m) != "non-basis"


@settings(max_examples=200, deadline=None)
@given(elements, ring_elems, ring_elems)
def test_derivation_law(e, r, s):
    from fiblie.core import ring_mul

    lhs = apply(e, ring_mul(r, s))
    rhs = ring_mul(apply(e, r), s) ^ ring_mul(r, apply(e, s))
    assert lhs == rhs


@settings(max_examples=200, deadline=None)
@given(elements)
def test_print_parse_roundtrip(e):
    assert parse_element(format_element(e)) == e
