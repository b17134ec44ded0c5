"""Degree-truncated free Lie algebra on two generators over GF(2), and the
quotient by the three defining relations of the algebra.

The free Lie algebra is realised inside the free associative algebra on
x1, x2 (noncommutative GF(2) polynomials, words as bitsets): Lyndon-word
standard bracketings expand triangularly with leading word the Lyndon
word itself, so they stay independent over GF(2).  The relation ideal is
closed degree by degree under bracketing with the Lyndon basis.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from . import gf2, series
from .core import Element, FibLieError, bracket, power_2k, v

Word = tuple[int, ...]
Poly = frozenset[Word]
Tree = int | tuple  # a letter, or a pair of trees


def concat_mul(p: Poly, q: Poly) -> Poly:
    acc: set[Word] = set()
    for u in p:
        for w in q:
            uw = u + w
            if uw in acc:
                acc.remove(uw)
            else:
                acc.add(uw)
    return frozenset(acc)


def lie_bracket_poly(p: Poly, q: Poly) -> Poly:
    return concat_mul(p, q) ^ concat_mul(q, p)


def lyndon_words(alphabet: int, max_len: int) -> list[Word]:
    """Duval's generation, lexicographic order, lengths 1..max_len."""
    out: list[Word] = []
    w = [0]
    while w:
        out.append(tuple(x + 1 for x in w))
        m = len(w)
        while len(w) < max_len:
            w.append(w[len(w) - m])
        while w and w[-1] == alphabet - 1:
            w.pop()
        if w:
            w[-1] += 1
    return sorted(out, key=lambda word: (len(word), word))


def standard_factorization(w: Word) -> tuple[Word, Word]:
    """w = uv with v the longest proper Lyndon suffix."""
    best = None
    for i in range(1, len(w)):
        suffix = w[i:]
        if _is_lyndon(suffix):
            best = i
            break
    if best is None:
        raise ValueError(f"{w} has no Lyndon factorization")
    return w[:best], w[best:]


def _is_lyndon(w: Word) -> bool:
    return all(w < w[i:] for i in range(1, len(w)))


@lru_cache(maxsize=None)
def bracketing(w: Word) -> Tree:
    if len(w) == 1:
        return w[0]
    u, s = standard_factorization(w)
    return (bracketing(u), bracketing(s))


def tree_poly(t: Tree) -> Poly:
    if isinstance(t, int):
        return frozenset({(t,)})
    return lie_bracket_poly(tree_poly(t[0]), tree_poly(t[1]))


def tree_degree(t: Tree) -> int:
    if isinstance(t, int):
        return 1
    return tree_degree(t[0]) + tree_degree(t[1])


def left_normed(letters: list[int]) -> Tree:
    tree: Tree = letters[0]
    for letter in letters[1:]:
        tree = (tree, letter)
    return tree


def _word_index(d: int) -> dict[Word, int]:
    words = []

    def rec(prefix: Word) -> None:
        if len(prefix) == d:
            words.append(prefix)
            return
        for letter in (1, 2):
            rec(prefix + (letter,))

    rec(())
    return {w: i for i, w in enumerate(words)}


def poly_vec(p: Poly, index: dict[Word, int]) -> int:
    out = 0
    for w in p:
        out |= 1 << index[w]
    return out


def necklace_dim(n: int, q: int = 2) -> int:
    """Witt formula oracle: (1/n) sum_{d|n} mu(d) q^(n/d)."""

    def mobius(m: int) -> int:
        result = 1
        d = 2
        while d * d <= m:
            if m % d == 0:
                m //= d
                if m % d == 0:
                    return 0
                result = -result
            d += 1
        if m > 1:
            result = -result
        return result

    total = sum(mobius(d) * q ** (n // d) for d in range(1, n + 1) if n % d == 0)
    assert total % n == 0
    return total // n


@dataclass
class FreeLieBasis:
    """Lyndon basis through total degree ``degree``."""

    degree: int
    words: list[Word] = field(default_factory=list)
    trees: dict[Word, Tree] = field(default_factory=dict)
    polys: dict[Word, Poly] = field(default_factory=dict)

    def by_degree(self, d: int) -> list[Word]:
        return [w for w in self.words if len(w) == d]

    def dims(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for w in self.words:
            out[len(w)] = out.get(len(w), 0) + 1
        return out

    def bracket_in_basis(self, w1: Word, w2: Word) -> set[Word]:
        """Structure constants: [b(w1), b(w2)] expanded in the Lyndon basis."""
        d = len(w1) + len(w2)
        if d > self.degree:
            raise ValueError("bracket degree exceeds the table cap")
        target = lie_bracket_poly(self.polys[w1], self.polys[w2])
        return self.express(target, d)

    def express(self, p: Poly, d: int) -> set[Word]:
        """Write a degree-d Lie polynomial in the basis (triangular reduction
        on leading Lyndon words)."""
        support: set[Word] = set()
        rest = p
        while rest:
            lead = min(rest)
            if lead not in self.polys or len(lead) != d:
                raise FibLieError(f"not in the Lie span: leading word {lead}")
            support.add(lead)
            rest = rest ^ self.polys[lead]
        return support


def free_lie(degree: int) -> FreeLieBasis:
    """Lyndon basis and expansion data up to the total degree cap."""
    if degree < 1:
        raise ValueError("degree cap must be >= 1")
    fl = FreeLieBasis(degree)
    fl.words = lyndon_words(2, degree)
    for w in fl.words:
        t = bracketing(w)
        p = tree_poly(t)
        assert min(p) == w, "Lyndon bracketing lost its leading word"
        fl.trees[w] = t
        fl.polys[w] = p
    return fl


def evaluate(tree: Tree, assignment: dict[int, Element]) -> Element:
    """Structural evaluation of a bracketing through the monomial engine."""
    if isinstance(tree, int):
        return assignment[tree]
    return bracket(evaluate(tree[0], assignment), evaluate(tree[1], assignment))


# the defining relations, as left-normed Lie words in x1, x2
RELATION_TREES: tuple[Tree, ...] = (
    left_normed([2, 1, 1, 1]),
    left_normed([2, 1, 1, 2, 2]),
    left_normed([1, 2, 2, 2, 2]),
)


@lru_cache(maxsize=None)
def pivot_tree(n: int) -> Tree:
    """v_n as a bracketing of the generators: v_{k+2} = [v_k, v_{k+1}]."""
    if n in (1, 2):
        return n
    return (pivot_tree(n - 2), pivot_tree(n - 1))


def _substitute(tree: Tree, images: dict[int, Tree]) -> Tree:
    if isinstance(tree, int):
        return images[tree]
    return (_substitute(tree[0], images), _substitute(tree[1], images))


def shifted_relation_trees(shifts: int) -> tuple[Tree, ...]:
    """The relations together with their first ``shifts`` shift images,
    written in the free generators via the pivot bracketings."""
    out = list(RELATION_TREES)
    for k in range(1, shifts + 1):
        images = {1: pivot_tree(1 + k), 2: pivot_tree(2 + k)}
        out.extend(_substitute(t, images) for t in RELATION_TREES)
    return tuple(out)


def relations_vanish(shift: int = 0) -> bool:
    """The three relations evaluate to zero under x_i -> v_{i+shift}."""
    assignment = {1: v(1 + shift), 2: v(2 + shift)}
    return all(not evaluate(t, assignment) for t in RELATION_TREES)


def relation_shifts_check(k_max: int) -> bool:
    """Relations and the restricted relation v_1^4 = 0, with all shifts."""
    for k in range(k_max + 1):
        if not relations_vanish(k):
            return False
        if power_2k(v(1 + k), 2):
            return False
    return True


def quotient_dims(
    relation_trees: tuple[Tree, ...], degree: int, fl: FreeLieBasis | None = None
) -> dict[int, int]:
    """Dimensions per total degree of (free Lie algebra)/(ideal generated by
    the relations), the ideal closed degree by degree under bracketing
    with Lyndon basis elements."""
    if fl is None:
        fl = free_lie(degree)
    indexes = {d: _word_index(d) for d in range(1, degree + 1)}
    # spans[d]: reduced generating rows of the degree-d ideal layer
    spans: dict[int, gf2.Span] = {d: gf2.Span() for d in range(1, degree + 1)}
    layer_polys: dict[int, list[Poly]] = {d: [] for d in range(1, degree + 1)}

    def insert(p: Poly, d: int) -> None:
        if not p:
            return
        if spans[d].add(poly_vec(p, indexes[d])):
            layer_polys[d].append(p)

    for t in relation_trees:
        d = tree_degree(t)
        if d <= degree:
            insert(tree_poly(t), d)
    for d in range(1, degree + 1):
        for d_low in range(1, d):
            d_gen = d - d_low
            gens = fl.by_degree(d_gen)
            for p in list(layer_polys[d_low]):
                for w in gens:
                    insert(lie_bracket_poly(p, fl.polys[w]), d)
    dims = {}
    free_dims = fl.dims()
    for d in range(1, degree + 1):
        dims[d] = free_dims.get(d, 0) - len(spans[d])
    return dims


def target_dims(degree: int) -> dict[int, int]:
    """dim of the algebra per total degree, from basis enumeration."""
    h = series.hilbert_one_var(degree)
    return {d: h[d] for d in range(1, degree + 1)}


@dataclass
class PresentationReport:
    degree: int
    free: dict[int, int]
    quotient: dict[int, int]
    target: dict[int, int]

    def matches_through(self, degree: int) -> bool:
        return all(self.quotient[d] == self.target[d] for d in range(1, degree + 1))


def presentation_report(degree: int = 7) -> PresentationReport:
    fl = free_lie(degree)
    return PresentationReport(
        degree=degree,
        free=fl.dims(),
        quotient=quotient_dims(RELATION_TREES, degree, fl),
        target=target_dims(degree),
    )
