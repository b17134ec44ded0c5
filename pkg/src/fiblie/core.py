"""Exact arithmetic for derivation monomials over R = GF(2)[t_0,t_1,...]/(t_i^2).

The algebra lives inside Der R and is generated by the pivot derivations
v_1, v_2.  Working values are GF(2) combinations of monomials
``t_{i_1}*...*t_{i_k}*v_n``: a squarefree tail of ring generators times a
pivot.  Brackets, squares and the ring action are evaluated through the
closed forms

    [v_i, v_j] = t_{i-1} t_i ... t_{j-3} v_{j+1}              (i < j)
    v_n(t_j)   = t_{n-1} t_n ... t_{j-2} | 1 | 0              (n < j | n = j | n > j)
    v_i^2      = t_{i-1} v_{i+2}

so the infinite recursive expansion of the pivots is never materialised.

Representation: a tail is a bitmask of t-indices (``RingMonomial``, a plain
int; bit i set means the factor t_i, mask 0 means 1).  A ``RingElement`` is a
frozenset of such masks.  GF(2) addition everywhere is symmetric difference
of monomial sets.  Index masks are capped at ``LIMITS.index_ceiling``;
exceeding the cap raises rather than truncating.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Literal, NamedTuple

RingMonomial = int
RingElement = frozenset[int]

RING_ONE: RingElement = frozenset({0})
RING_ZERO: RingElement = frozenset()


class FibLieError(Exception):
    """Base class for errors raised by this package."""


class IndexCeilingError(FibLieError):
    """A t-index beyond the configured bitmask ceiling was requested."""


class MonomialLimitError(FibLieError):
    """An intermediate element exceeded the configured monomial count cap."""


@dataclass
class Limits:
    index_ceiling: int = 128
    monomial_limit: int = 1_000_000


LIMITS = Limits()


def _check_index(i: int) -> None:
    if i >= LIMITS.index_ceiling:
        raise IndexCeilingError(f"t-index {i} exceeds ceiling {LIMITS.index_ceiling}")


def _range_mask(lo: int, hi: int) -> int:
    """Bitmask of t_lo ... t_hi; the empty product (mask 0) when lo > hi."""
    if lo > hi:
        return 0
    _check_index(hi)
    return ((1 << (hi - lo + 1)) - 1) << lo


def ring_monomial(indices: Iterable[int]) -> RingMonomial:
    """Mask of a squarefree ring monomial from distinct t-indices."""
    mask = 0
    for i in indices:
        if i < 0:
            raise ValueError(f"negative t-index {i}")
        _check_index(i)
        bit = 1 << i
        if mask & bit:
            raise ValueError(f"repeated t-index {i}")
        mask |= bit
    return mask


def ring_indices(mask: RingMonomial) -> tuple[int, ...]:
    out = []
    while mask:
        lsb = mask & -mask
        out.append(lsb.bit_length() - 1)
        mask ^= lsb
    return tuple(out)


class Monomial(NamedTuple):
    """tail * v_pivot.  Tuple order (pivot, tail) is the canonical order."""

    pivot: int
    tail: RingMonomial


def monomial(pivot: int, indices: Iterable[int] = ()) -> Monomial:
    if pivot < 1:
        raise ValueError(f"pivot index must be >= 1, got {pivot}")
    return Monomial(pivot, ring_monomial(indices))


def v(n: int) -> "Element":
    """The pivot element v_n as an Element."""
    return Element(frozenset({monomial(n)}))


@dataclass(frozen=True)
class Element:
    """GF(2) linear combination of monomials; the empty set is zero."""

    monomials: frozenset[Monomial] = frozenset()

    def __add__(self, other: "Element") -> "Element":
        return Element(self.monomials ^ other.monomials)

    def __bool__(self) -> bool:
        return bool(self.monomials)

    def __len__(self) -> int:
        return len(self.monomials)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(sorted(self.monomials))

    def __str__(self) -> str:
        return format_element(self)

    def pivot_range(self) -> tuple[int, int]:
        """(min, max) pivot index; raises on the zero element."""
        if not self.monomials:
            raise ValueError("zero element has no pivot range")
        pivots = [m.pivot for m in self.monomials]
        return min(pivots), max(pivots)


ZERO = Element()


def element(monomials: Iterable[Monomial]) -> Element:
    acc: set[Monomial] = set()
    for m in monomials:
        _toggle(acc, m)
    return Element(frozenset(acc))


def _toggle(acc: set, item) -> None:
    if item in acc:
        acc.remove(item)
    else:
        acc.add(item)


def _action_masks(n: int, smask: int) -> list[int]:
    """Masks of v_n applied to the ring monomial smask (Leibniz over factors)."""
    out = []
    s = smask
    while s:
        lsb = s & -s
        j = lsb.bit_length() - 1
        s ^= lsb
        rest = smask ^ lsb
        if n == j:
            out.append(rest)
        elif n < j:
            m = _range_mask(n - 1, j - 2)
            if not (m & rest):
                out.append(rest | m)
        # n > j: v_n(t_j) = 0
    return out


def pivot_action(n: int, j: int) -> RingElement:
    """v_n(t_j) as a ring element."""
    if n < 1 or j < 0:
        raise ValueError("need pivot >= 1 and t-index >= 0")
    if n > j:
        return RING_ZERO
    if n == j:
        return RING_ONE
    return frozenset({_range_mask(n - 1, j - 2)})


def pivot_bracket(i: int, j: int) -> Element:
    """[v_i, v_j]; symmetric in characteristic 2, zero on the diagonal."""
    if i < 1 or j < 1:
        raise ValueError("pivot indices must be >= 1")
    if i == j:
        return ZERO
    if i > j:
        i, j = j, i
    return Element(frozenset({Monomial(j + 1, _range_mask(i - 1, j - 3))}))


def apply(e: Element, r: RingElement) -> RingElement:
    """Apply the derivation e to the ring element r."""
    acc: set[int] = set()
    for n, tl in e.monomials:
        for s in r:
            for am in _action_masks(n, s):
                if not (am & tl):
                    _toggle(acc, am | tl)
    return frozenset(acc)


def ring_mul(r: RingElement, s: RingElement) -> RingElement:
    """Product in R; colliding t-indices annihilate."""
    acc: set[int] = set()
    for a in r:
        for b in s:
            if not (a & b):
                _toggle(acc, a | b)
    return frozenset(acc)


def _bracket_mono(m1: Monomial, m2: Monomial, acc: set[Monomial]) -> None:
    # [r v_n, s v_m] = r v_n(s) v_m + s v_m(r) v_n + r s [v_n, v_m]
    n, r = m1
    m, s = m2
    for am in _action_masks(n, s):
        if not (am & r):
            _toggle(acc, Monomial(m, am | r))
    for am in _action_masks(m, r):
        if not (am & s):
            _toggle(acc, Monomial(n, am | s))
    if n != m and not (r & s):
        i, j = (n, m) if n < m else (m, n)
        pmask = _range_mask(i - 1, j - 3)
        rs = r | s
        if not (pmask & rs):
            _toggle(acc, Monomial(j + 1, pmask | rs))


def bracket(e1: Element, e2: Element) -> Element:
    """Lie bracket, bilinear over the monomials of both arguments."""
    acc: set[Monomial] = set()
    for m1 in e1.monomials:
        for m2 in e2.monomials:
            _bracket_mono(m1, m2, acc)
    return Element(frozenset(acc))


def _square_mono(m: Monomial, acc: set[Monomial]) -> None:
    # (r v_n)^2 = r v_n(r) v_n + r^2 v_n^2, and r^2 = 0 unless r = 1
    n, r = m
    if r == 0:
        _check_index(n - 1)
        _toggle(acc, Monomial(n + 2, 1 << (n - 1)))
        return
    if r & (r - 1):
        # at least two tail factors: every Leibniz term of r*v_n(r) collides
        return
    j = r.bit_length() - 1
    if n > j:
        return
    if n == j:
        _toggle(acc, Monomial(n, r))
        return
    am = _range_mask(n - 1, j - 2)
    _toggle(acc, Monomial(n, am | r))


def square(e: Element) -> Element:
    """p-th power (p = 2): sum of monomial squares plus pairwise brackets."""
    acc: set[Monomial] = set()
    mons = list(e.monomials)
    for m in mons:
        _square_mono(m, acc)
    for m1, m2 in combinations(mons, 2):
        _bracket_mono(m1, m2, acc)
    return Element(frozenset(acc))


def power_2k(e: Element, k: int, limit: int | None = None) -> Element:
    """e^(2^k) by iterated squaring; k = 0 is the identity."""
    if k < 0:
        raise ValueError("exponent count must be >= 0")
    cap = LIMITS.monomial_limit if limit is None else limit
    for _ in range(k):
        e = square(e)
        if len(e.monomials) > cap:
            raise MonomialLimitError(
                f"intermediate element has {len(e.monomials)} monomials (cap {cap})"
            )
    return e


def tau(e: Element, k: int = 1) -> Element:
    """Shift endomorphism: every t-index and pivot index raised by k."""
    if k < 0:
        raise ValueError("shift count must be >= 0")
    if k == 0:
        return e
    out = set()
    for n, r in e.monomials:
        shifted = r << k
        if shifted:
            _check_index(shifted.bit_length() - 1)
        out.add(Monomial(n + k, shifted))
    return Element(frozenset(out))


BasisKind = Literal["standard", "square", "non-basis"]


def is_basis_monomial(m: Monomial) -> BasisKind:
    """standard: tail within {0..n-4}; square: tail exactly {n-3}."""
    n, r = m
    if r == 0:
        return "standard"
    if n >= 4 and r < (1 << (n - 3)):
        return "standard"
    if n >= 3 and r == (1 << (n - 3)):
        return "square"
    return "non-basis"


def is_basis_element(e: Element) -> bool:
    return all(is_basis_monomial(m) != "non-basis" for m in e.monomials)


# --- canonical text form: "t0*t1*v5", "0", "+"-separated terms -------------

_MONO_RE = re.compile(r"^(?:t(\d+)\*)*v(\d+)$")


def format_monomial(m: Monomial) -> str:
    parts = [f"t{i}" for i in ring_indices(m.tail)]
    parts.append(f"v{m.pivot}")
    return "*".join(parts)


def format_element(e: Element) -> str:
    if not e.monomials:
        return "0"
    return " + ".join(format_monomial(m) for m in sorted(e.monomials))


def format_ring_monomial(mask: RingMonomial) -> str:
    if mask == 0:
        return "1"
    return "*".join(f"t{i}" for i in ring_indices(mask))


def format_ring_element(r: RingElement) -> str:
    if not r:
        return "0"
    return " + ".join(format_ring_monomial(m) for m in sorted(r))


def parse_monomial(text: str) -> Monomial:
    compact = text.replace(" ", "")
    match = _MONO_RE.match(compact)
    if not match:
        raise ValueError(f"malformed monomial {text!r}")
    pivot = int(compact.rsplit("v", 1)[1])
    tails = [int(p[1:]) for p in compact.split("*")[:-1]]
    return monomial(pivot, tails)


def parse_element(text: str) -> Element:
    compact = text.strip()
    if compact == "0":
        return ZERO
    return element(parse_monomial(term) for term in compact.split("+"))
