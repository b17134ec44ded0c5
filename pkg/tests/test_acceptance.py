"""Acceptance suite: every criterion at its stated tolerance, one
pass/fail line per criterion.

Run with ``pytest tests/test_acceptance.py -v -s`` (or ``fiblie verify``
for the same checks outside pytest).  All checks are exact except the
documented floating constants (tolerance 1e-3) and criterion 12, which
reports diagnostics without hard thresholds.
"""

from __future__ import annotations

from fiblie import verify


def _run(name: str) -> None:
    result = verify.CRITERIA[name]()
    status = "PASS" if result.ok else "FAIL"
    print(f"\n{status} {result.name} ({result.seconds:.2f}s): {result.detail}")
    assert result.ok, f"{result.name}: {result.detail}"


def test_criterion_01_basis_counts():
    """|W_n| = 2^(n-3) for n = 3..24, |W~_n| = |W_n| + 1; runtime < 5 s."""
    result = verify.CRITERIA["basis"]()
    print(f"\n{'PASS' if result.ok else 'FAIL'} {result.name} "
          f"({result.seconds:.2f}s): {result.detail}")
    assert result.ok, result.detail
    assert result.seconds < 5.0, f"runtime target missed: {result.seconds:.2f}s"


def test_criterion_02_recursive_construction():
    """Bracket-built levels equal direct enumeration for n = 3..20."""
    _run("recursion")


def test_criterion_03_relations():
    """Three relations plus v_1^4 vanish, with shifts through k = 10."""
    _run("relations")


def test_criterion_04_lie_laws():
    """Alternation, Jacobi, restricted identity: 10^4 seeded trials each."""
    _run("laws")


def test_criterion_05_nillity():
    """e^(2^(m-n+2)) = 0 exhaustively (<= 3 monomials, pivots <= 6) and on
    500 random samples; v_1 attains index exactly 2."""
    _run("nil")


def test_criterion_06_hilbert_recursion():
    """Functional recursion equals enumeration, n <= 20, D = 40; < 30 s."""
    result = verify.CRITERIA["hilbert"]()
    print(f"\n{'PASS' if result.ok else 'FAIL'} {result.name} "
          f"({result.seconds:.2f}s): {result.detail}")
    assert result.ok, result.detail
    assert result.seconds < 30.0, f"runtime target missed: {result.seconds:.2f}s"


def test_criterion_07_euler_inversion():
    """Euler product times enveloping series is 1 through degree 40."""
    _run("euler")


def test_criterion_08_growth():
    """Weight-growth identities, sandwich bounds, s(F_n) = s(F_n+1) = 2,
    and the two no-limit witness sequences (C within 1e-3)."""
    _run("growth")


def test_criterion_09_geometry():
    """Strip/rectangle bounds exact through level 24; split closed and
    locally nilpotent; abelian ideal exhaustive through length 8."""
    _run("geometry")


def test_criterion_10_homology():
    """d.d = 0, H_0/H_1 exact, Euler cross-check for a+b <= 10, first
    nonzero H_2 by degree 5, monotone H_2 accumulation; < 2 min."""
    result = verify.CRITERIA["homology"]()
    print(f"\n{'PASS' if result.ok else 'FAIL'} {result.name} "
          f"({result.seconds:.2f}s): {result.detail}")
    assert result.ok, result.detail
    assert result.seconds < 120.0, f"runtime target missed: {result.seconds:.2f}s"


def test_criterion_11_presentation():
    """Quotient by the three relations matches algebra dims through 7."""
    _run("presentation")


def test_criterion_12_diagnostics():
    """Growth and envelope exponents reported against 0.5902; Euler values
    at t in {0.5, 0.6, 0.7} within the rigorous tail bound."""
    _run("diagnostics")
