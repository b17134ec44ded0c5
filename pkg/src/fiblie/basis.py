"""Standard monomial bases W_n of the Fibonacci Lie algebra and the
restricted variant with pivot squares adjoined.

Level n consists of the monomials t_0^* ... t_{n-4}^* v_n (all 2^(n-3)
tail subsets for n >= 4, the bare pivot for n <= 3); the restricted basis
additionally carries the square t_{n-3} v_n for n >= 3.  Enumeration order
is tail-mask ascending, which every downstream matrix and CSV inherits.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Literal

from .core import (
    Element,
    FibLieError,
    Monomial,
    bracket,
    is_basis_monomial,
    v,
)

Kind = Literal["lie", "restricted"]


class BasisFormError(FibLieError):
    """An operation required a basis monomial but received something else."""


def tail_width(n: int) -> int:
    """Number of admissible tail positions at level n (bits 0..n-4)."""
    return max(n - 3, 0)


@dataclass(frozen=True)
class BasisLevel:
    """All basis monomials of one length, in tail-mask order."""

    n: int
    kind: Kind = "lie"
    masks: range = field(init=False, repr=False)

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("level index must be >= 1")
        from .core import IndexCeilingError, LIMITS

        if tail_width(self.n) > LIMITS.index_ceiling:
            raise IndexCeilingError(
                f"level {self.n} needs t-indices beyond ceiling {LIMITS.index_ceiling}"
            )
        object.__setattr__(self, "masks", range(1 << tail_width(self.n)))

    @property
    def square(self) -> Monomial | None:
        if self.kind == "restricted" and self.n >= 3:
            return Monomial(self.n, 1 << (self.n - 3))
        return None

    def __len__(self) -> int:
        extra = 0 if self.square is None else 1
        return len(self.masks) + extra

    def __iter__(self) -> Iterator[Monomial]:
        for mask in self.masks:
            yield Monomial(self.n, mask)
        sq = self.square
        if sq is not None:
            yield sq

    def monomials(self) -> list[Monomial]:
        return list(self)


def enumerate_W(n: int, kind: Kind = "lie") -> BasisLevel:
    """Level n of the (restricted) standard-monomial basis."""
    return BasisLevel(n, kind)


def enumerate_W_upto(n: int, kind: Kind = "lie") -> list[BasisLevel]:
    """Levels 1..n."""
    if n < 1:
        raise ValueError("level index must be >= 1")
    return [BasisLevel(k, kind) for k in range(1, n + 1)]


def count_upto(n: int, kind: Kind = "lie") -> int:
    return sum(len(level) for level in enumerate_W_upto(n, kind))


def build_W_recursive(n: int) -> set[Monomial]:
    """W_{n+1} built as [v_{n-1}, W_n] plus [v_{n-2}, W_n] through the
    bracket engine; cross-validates against direct enumeration."""
    if n < 3:
        raise ValueError("recursive construction starts at level 3")
    out: set[Monomial] = set()
    lower = v(n - 1)
    adder = v(n - 2)
    for m in enumerate_W(n):
        w = Element(frozenset({m}))
        for gen in (lower, adder):
            res = bracket(gen, w)
            if len(res) != 1:
                raise BasisFormError(f"bracket of v with {m} is not a monomial: {res}")
            out.update(res.monomials)
    return out


def classify_fig1(m: Monomial) -> Literal["green", "blue"]:
    """blue when the monomial arose as [v_{n-3}, W_{n-1}] (t_{n-4} present),
    green when it arose as [v_{n-2}, W_{n-1}]."""
    if is_basis_monomial(m) != "standard" or m.pivot < 4:
        raise BasisFormError(f"expected a standard monomial of length >= 4, got {m}")
    return "blue" if m.tail >> (m.pivot - 4) & 1 else "green"


@dataclass(frozen=True)
class Decomposition:
    """W_{<=n} split as {v_1} + tau(W_{<=n-1}) + t_0 tau(W_{<=n-1} - {v_1,v_2}).

    Parts hold references into the enumerated levels, not copies.
    """

    head: list[Monomial]
    shifted: list[Monomial]
    t0_shifted: list[Monomial]


def decompose_W(n: int) -> Decomposition:
    if n < 2:
        raise ValueError("decomposition needs n >= 2")
    head: list[Monomial] = []
    shifted: list[Monomial] = []
    t0_shifted: list[Monomial] = []
    for level in enumerate_W_upto(n):
        for m in level:
            if m == Monomial(1, 0):
                head.append(m)
            elif m.tail & 1:
                t0_shifted.append(m)
            else:
                shifted.append(m)
    return Decomposition(head, shifted, t0_shifted)
