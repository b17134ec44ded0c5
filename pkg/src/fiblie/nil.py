"""Nil p-mapping experiments: exact minimal nilpotency indices under
iterated squaring, the structural pivot-shift invariant, and the two
floating index-growth constants.

For a basis-form element spanning pivots n..m the index never exceeds
m - n + 2; squaring advances the pivot floor by two, so depth rather
than width is what keeps the computation finite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import (
    Element,
    FibLieError,
    MonomialLimitError,
    element,
    is_basis_element,
    monomial,
    square,
)

LAMBDA_FLOAT = (1 + 5**0.5) / 2
# N < C (m - n + 1) while a^(2^N) != 0, and exponent < C1 * senior-index
EST_LOW_C = math.log(LAMBDA_FLOAT) / math.log(LAMBDA_FLOAT**2 / 2)  # ~ 1.787
EST_UP_C1 = math.log(LAMBDA_FLOAT) / math.log(2 / LAMBDA_FLOAT)  # ~ 2.27


class NilCapError(FibLieError):
    """The exponent cap was reached before the element vanished."""


@dataclass(frozen=True)
class NilReport:
    element: Element
    min_pivot: int
    max_pivot: int
    index: int
    bound: int
    peak_monomials: int
    scalar_senior_tail: bool

    @property
    def senior_index(self) -> int:
        """s of the coarse presentation: max pivot, +1 if its tail has a
        scalar term (the senior tail must be scalar-free)."""
        return self.max_pivot + 1 if self.scalar_senior_tail else self.max_pivot


def nil_index(e: Element, cap: int = 64, limit: int | None = None) -> NilReport:
    """Minimal N with e^(2^N) = 0, by iterated squaring."""
    from .core import LIMITS

    if not e:
        raise ValueError("nil index of the zero element is undefined")
    if not is_basis_element(e):
        raise ValueError("expected a basis-form element")
    mono_cap = LIMITS.monomial_limit if limit is None else limit
    lo, hi = e.pivot_range()
    bound = hi - lo + 2
    scalar_senior = any(m.pivot == hi and m.tail == 0 for m in e.monomials)
    peak = len(e)
    power = e
    index = 0
    while power:
        if index >= cap:
            raise NilCapError(f"element did not vanish within exponent cap {cap}")
        power = square(power)
        index += 1
        peak = max(peak, len(power))
        if len(power) > mono_cap:
            raise MonomialLimitError(
                f"intermediate element has {len(power)} monomials (cap {mono_cap})"
            )
    if index > bound:
        raise FibLieError(f"index {index} exceeded the guaranteed bound {bound}")
    return NilReport(e, lo, hi, index, bound, peak, scalar_senior)


def shift_structure_check(e: Element, max_steps: int | None = None) -> bool:
    """Squares of a basis-form element keep the structural shape
    sum_{i=n+2N}^{m+N} r v_i + (scalar-free tail) v_{m+N+1}."""
    if not e:
        return True
    if not is_basis_element(e):
        raise ValueError("expected a basis-form element")
    lo, hi = e.pivot_range()
    steps = hi - lo + 2 if max_steps is None else max_steps
    power = e
    for big_n in range(1, steps + 1):
        power = square(power)
        if not power:
            return True
        for m in power.monomials:
            if m.pivot < lo + 2 * big_n or m.pivot > hi + big_n + 1:
                return False
            if m.pivot == hi + big_n + 1 and m.tail == 0:
                return False
    return True


def pivot_interval(n: int, m: int) -> Element:
    """The conjectured extremal element v_n + v_{n+1} + ... + v_m."""
    if not 1 <= n <= m:
        raise ValueError("need 1 <= n <= m")
    return element(monomial(k) for k in range(n, m + 1))


@dataclass(frozen=True)
class ScanRow:
    n: int
    m: int
    index: int
    bound: int
    tight: bool
    peak_monomials: int


def conjecture_scan(
    n_range: tuple[int, int], m_max: int, cap: int = 64, limit: int | None = None
) -> list[ScanRow]:
    """Exact indices of v_n + ... + v_m against the bound m - n + 2.

    Output only; whether the bound is always attained is an open question.
    """
    rows = []
    for n in range(n_range[0], n_range[1] + 1):
        for m in range(n, m_max + 1):
            report = nil_index(pivot_interval(n, m), cap=cap, limit=limit)
            rows.append(
                ScanRow(
                    n,
                    m,
                    report.index,
                    report.bound,
                    report.index == report.bound,
                    report.peak_monomials,
                )
            )
    return rows


def bound_constants_check(reports: list[NilReport], tol: float = 1e-3) -> bool:
    """Soft check of both floating index estimates on observed minimal
    indices: N - 1 < C (m - n + 1) and N - 1 < C1 * s."""
    if abs(EST_LOW_C - 1.787) > tol or abs(EST_UP_C1 - 2.27) > 5 * tol:
        return False
    for r in reports:
        if not r.index - 1 < EST_LOW_C * (r.max_pivot - r.min_pivot + 1):
            return False
        if not r.index - 1 < EST_UP_C1 * r.senior_index:
            return False
    return True
