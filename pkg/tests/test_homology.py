"""Unit tests for the sliced Chevalley-Eilenberg complex."""

from __future__ import annotations

import random

from fiblie import gf2
from fiblie.core import ZERO, bracket, element, monomial
from fiblie.grading import GoldenInt, weight
from fiblie.homology import (
    Multidegree,
    chain_basis,
    dd_is_zero,
    differential,
    euler_crosscheck,
    euler_slice,
    h2_accumulation,
    homology_dim,
    homology_table,
    inside_homology_strip,
    paraboloid_report,
    wedge_stratification_ok,
    wedge_weight,
)
from fiblie.series import euler_product


def test_chain_basis_examples():
    assert chain_basis(2, Multidegree(1, 1)) == ((monomial(1), monomial(2)),)
    assert chain_basis(1, Multidegree(1, 1)) == ((monomial(3),),)
    assert chain_basis(0, Multidegree(0, 0)) == ((),)
    assert chain_basis(0, Multidegree(1, 0)) == ()


def test_differential_examples():
    d2 = differential(2, Multidegree(1, 1))
    assert d2.d_rows == (1,)  # v_1 ^ v_2 -> v_3
    d1 = differential(1, Multidegree(1, 1))
    assert d1.d_rows == (0,)
    # [v_1, t_0 v_4] = 0: the action v_1(t_0) vanishes and t_0^2 kills the rest
    assert bracket(element([monomial(1)]), element([monomial(4, [0])])) == ZERO
    d2b = differential(2, Multidegree(3, 1))
    assert d2b.basis == ((monomial(1), monomial(4, [0])),)
    assert d2b.d_rows == (0,)


def test_homology_dims_examples():
    assert homology_dim(0, Multidegree(0, 0)) == 1
    assert homology_dim(1, Multidegree(1, 0)) == 1
    assert homology_dim(1, Multidegree(0, 1)) == 1
    assert homology_dim(1, Multidegree(1, 1)) == 0
    assert homology_dim(2, Multidegree(1, 1)) == 0
    assert homology_dim(2, Multidegree(3, 1)) == 1


def test_dd_zero():
    for a in range(7):
        for b in range(7):
            if a + b > 8:
                continue
            for n in range(1, a + b + 1):
                assert dd_is_zero(n, Multidegree(a, b))


def test_euler_crosscheck():
    euler = euler_product(8)
    assert euler_slice(Multidegree(1, 0)) == -1
    assert euler_slice(Multidegree(0, 0)) == 1
    for d in range(9):
        for a in range(d + 1):
            assert euler_crosscheck(Multidegree(a, d - a), euler)


def test_rank_oracle_agreement():
    rng = random.Random(3)
    for _ in range(120):
        n_cols = rng.randrange(1, 12)
        rows = [rng.getrandbits(n_cols) for _ in range(rng.randrange(0, 10))]
        assert gf2.rank(rows, n_cols) == gf2.rank_naive(rows, n_cols)
    # and on real differentials
    for deg in (Multidegree(3, 2), Multidegree(2, 4), Multidegree(4, 3)):
        for n in range(1, 6):
            d = differential(n, deg)
            if d.n_cols <= 64:
                assert gf2.rank(list(d.d_rows), max(d.n_cols, 1)) == gf2.rank_naive(
                    list(d.d_rows), max(d.n_cols, 1)
                )


def test_gf2_span():
    span = gf2.Span()
    assert span.add(0b101)
    assert span.add(0b011)
    assert not span.add(0b110)
    assert 0b110 in span and 0b001 not in span
    assert len(span) == 2


def test_h2_accumulation_monotone_and_positive():
    sums = h2_accumulation(6)
    assert sums == sorted(sums)
    assert sums[4] >= 1  # nonzero H_2 slice by total degree 4


def test_homology_strip_and_table():
    table = homology_table(6)
    for (n, a, b), d in table.entries.items():
        assert d > 0
        if n >= 1:
            assert inside_homology_strip(n, a, b)
    # margin outside the strip stays empty
    for a in range(8):
        for b in range(8):
            if a + b <= 7 and not inside_homology_strip(2, a, b):
                assert homology_dim(2, Multidegree(a, b)) == 0


def test_wedge_weight_additivity_and_stratification():
    for deg in (Multidegree(3, 3), Multidegree(2, 5)):
        for n in range(1, 5):
            for wedge in chain_basis(n, deg):
                total = GoldenInt(0, 0)
                for m in wedge:
                    total = total + weight(m).wt
                assert wedge_weight(wedge) == total
                assert wedge_stratification_ok(wedge)


def test_paraboloid_report():
    table = homology_table(6)
    rep = paraboloid_report(table.entries)
    assert rep.fitted_constant > 0
    phi = (1 + 5**0.5) / 2
    for xi, eta in rep.points:
        assert abs(eta) < rep.fitted_constant * xi**rep.theta_target * (1 + 1e-9)
