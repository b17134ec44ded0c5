"""Unit tests for lattice series, the enveloping operator, and Euler data."""

from __future__ import annotations

import pytest

from fiblie.grading import GoldenInt, LAMBDA, gr
from fiblie.basis import enumerate_W_upto
from fiblie.series import (
    LatticeSeries,
    SupportError,
    dilatation,
    e_operator,
    e_operator_exp,
    euler_eval_check,
    euler_inverse_check,
    euler_product,
    euler_product_1var,
    enveloping_growth_report,
    hilbert_enumerated,
    hilbert_lie,
    hilbert_one_var,
    hilbert_recursive,
    level_degree_counts,
    level_multidegree_counts,
    levels_for_degree,
    min_level_degree,
)


def series(d: dict, bound: int) -> LatticeSeries:
    return LatticeSeries(dict(d), bound)


def test_level_counts_match_enumeration():
    for n in range(1, 12):
        counts: dict = {}
        for m in enumerate_W_upto(n)[-1]:
            key = tuple(gr(m))
            counts[key] = counts.get(key, 0) + 1
        assert counts == level_multidegree_counts(n)
        degrees: dict = {}
        for m in enumerate_W_upto(n)[-1]:
            a, b = gr(m)
            degrees[a + b] = degrees.get(a + b, 0) + 1
        assert degrees == level_degree_counts(n)


def test_min_level_degree():
    assert [min_level_degree(n) for n in range(1, 8)] == [1, 1, 2, 3, 4, 6, 9]
    assert levels_for_degree(10) == list(range(1, 8))


def test_hilbert_enumerated_examples():
    assert hilbert_enumerated(2, "lie", 10).coeffs == {(1, 0): 1, (0, 1): 1}
    assert hilbert_enumerated(3, "lie", 10).coeffs == {(1, 0): 1, (0, 1): 1, (1, 1): 1}
    for n in range(3, 10):
        total = hilbert_enumerated(n, "lie", 100).total_mass()
        assert total == 1 + 2 ** (n - 2)


def test_hilbert_recursive_examples():
    assert hilbert_recursive(3, 10).coeffs == {(1, 0): 1, (0, 1): 1, (1, 1): 1}
    for n in range(2, 16):
        assert hilbert_recursive(n, 40) == hilbert_enumerated(n, "lie", 40)
    h = hilbert_recursive(15, 40)
    for n in range(1, 9):
        assert h[tuple(gr_pivot_pair(n))] >= 1


def gr_pivot_pair(n):
    from fiblie.grading import gr_pivot

    return gr_pivot(n)


def test_hilbert_strip_support():
    h = hilbert_lie(30)
    lam3 = GoldenInt(1, 2)
    lam2 = GoldenInt(1, 1)
    for (a, b) in h.coeffs:
        lower = GoldenInt(b, 0) - LAMBDA * a + lam3
        upper = LAMBDA * a + lam2 - GoldenInt(b, 0)
        assert lower.sign() > 0 and upper.sign() > 0


def test_e_operator_examples():
    free2 = e_operator(series({(1, 0): 1, (0, 1): 1}, 2))
    assert free2.coeffs == {
        (0, 0): 1,
        (1, 0): 1,
        (0, 1): 1,
        (2, 0): 1,
        (1, 1): 1,
        (0, 2): 1,
    }
    env2 = e_operator(hilbert_lie(2))
    assert env2[(1, 1)] == 2 and env2[(2, 0)] == 1 and env2[(0, 2)] == 1
    assert dilatation(series({(1, 0): 1, (0, 1): 1}, 4), 2).coeffs == {
        (2, 0): 1,
        (0, 2): 1,
    }


def test_e_operator_rejects_bad_input():
    with pytest.raises(ValueError):
        e_operator(series({(0, 0): 1}, 4))
    with pytest.raises(ValueError):
        e_operator(series({(1, 0): -1}, 4))


def test_e_operator_product_equals_exp():
    for bound in (6, 12, 25):
        h = hilbert_lie(bound)
        assert e_operator(h) == e_operator_exp(h)


def test_euler_product_examples():
    assert euler_product(2).coeffs == {(0, 0): 1, (1, 0): -1, (0, 1): -1}
    assert euler_product(6)[(1, 1)] == 0
    # direct low-degree expansion
    prod = euler_product(2) * e_operator(hilbert_lie(2))
    assert prod.coeffs == {(0, 0): 1}


def test_euler_inverse_check():
    assert euler_inverse_check(0)
    assert euler_inverse_check(2)
    assert euler_inverse_check(24)


def test_one_var_specialization():
    for bound in (8, 20):
        assert hilbert_lie(bound).one_var().coeffs == hilbert_one_var(bound).coeffs
    one = euler_product(15).one_var()
    assert one.coeffs == euler_product_1var(15).coeffs


def test_truncation_semantics():
    a = series({(1, 0): 1, (5, 5): 2}, 10)
    b = series({(1, 0): 1}, 4)
    assert (a + b).bound == 4
    assert (a + b).coeffs == {(1, 0): 2}
    assert (a * b)[(6, 5)] == 0


def test_recursive_support_assertion():
    # starting data outside the quadrant must trip the final assertion
    with pytest.raises(SupportError):
        LatticeSeries({(-1, 2): 1}, 5).assert_quadrant()


def test_enveloping_growth_report():
    rep = enveloping_growth_report(80)
    assert rep.gamma == sorted(rep.gamma)
    assert rep.witness_ok()
    assert rep.theta_hat and all(th > 0 for _, th in rep.theta_hat)


def test_euler_eval_check_small_degree():
    # with a deliberately small truncation the tail bound must refuse
    weak = euler_eval_check(degree=40)
    assert all(isinstance(r.tail_bound, float) for r in weak)
    strong = euler_eval_check(degree=400)
    for r in strong:
        assert r.tail_ok
        assert r.positive_ok and r.upper_ok
