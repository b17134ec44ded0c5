"""Unit tests for basis enumeration and the recursive construction."""

from __future__ import annotations

import pytest

from fiblie.basis import (
    BasisFormError,
    build_W_recursive,
    classify_fig1,
    count_upto,
    decompose_W,
    enumerate_W,
    enumerate_W_upto,
)
from fiblie.core import Monomial, ZERO, bracket, element, monomial, parse_element, tau


def test_level_examples():
    assert [m for m in enumerate_W(3)] == [Monomial(3, 0)]
    assert [m for m in enumerate_W(4)] == [Monomial(4, 0), Monomial(4, 1)]
    assert len(enumerate_W(10)) == 128


def test_counts_upto():
    assert count_upto(3) == 3
    assert count_upto(8) == 65
    assert count_upto(15) == 8193


def test_restricted_levels():
    assert len(enumerate_W(2, "restricted")) == 1
    lvl = enumerate_W(5, "restricted")
    assert len(lvl) == 5
    assert lvl.square == monomial(5, [2])


def test_recursive_construction_small():
    assert build_W_recursive(3) == set(enumerate_W(4))
    for n in range(3, 13):
        assert build_W_recursive(n) == set(enumerate_W(n + 1))


def test_recursive_step_matches_by_hand():
    # from W_3 = {v_3}: [v_2, v_3] = v_4 and [v_1, v_3] = t_0 v_4
    assert build_W_recursive(3) == {Monomial(4, 0), Monomial(4, 1)}


def test_classify_fig1():
    assert classify_fig1(monomial(5)) == "green"
    assert classify_fig1(monomial(4, [0])) == "blue"
    assert classify_fig1(monomial(5, [0])) == "green"
    with pytest.raises(BasisFormError):
        classify_fig1(monomial(3, [0]))


def test_decompose_small():
    d3 = decompose_W(3)
    assert d3.head == [Monomial(1, 0)]
    assert set(d3.shifted) == {Monomial(2, 0), Monomial(3, 0)}
    assert d3.t0_shifted == []
    d4 = decompose_W(4)
    assert set(d4.t0_shifted) == {Monomial(4, 1)}


def test_decompose_counts_and_exactness():
    for n in range(2, 12):
        d = decompose_W(n)
        total = len(d.head) + len(d.shifted) + len(d.t0_shifted)
        assert total == count_upto(n)
        # |W_{<=n+1}| = 1 + |W_{<=n}| + (|W_{<=n}| - 2)
        assert count_upto(n + 1) == 1 + 2 * count_upto(n) - 2
        # the shifted part is exactly tau of the lower union
        lower = [element([m]) for lvl in enumerate_W_upto(n - 1) for m in lvl]
        assert {next(iter(tau(e, 1).monomials)) for e in lower} == set(d.shifted)


def test_abelian_ideal_exhaustive():
    a_mons = [
        m for lvl in enumerate_W_upto(8) for m in lvl if m.tail & 1
    ]
    assert len(a_mons) == 31
    for m1 in a_mons:
        for m2 in a_mons:
            assert bracket(element([m1]), element([m2])) == ZERO


def test_bracket_with_pivot_is_monomial():
    w = parse_element("t0*t2*v6")
    res = bracket(parse_element("v5"), w)
    assert len(res) == 1 and next(iter(res.monomials)) == Monomial(7, 0b101)
