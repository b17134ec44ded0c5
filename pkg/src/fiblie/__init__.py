"""Exact symbolic computation for the Fibonacci restricted Lie algebra
over GF(2): monomial arithmetic, bases, weight geometry, lattice series,
nilpotency experiments, Chevalley-Eilenberg homology, and a low-degree
presentation checker.
"""

from .core import (
    Element,
    FibLieError,
    IndexCeilingError,
    LIMITS,
    Monomial,
    MonomialLimitError,
    ZERO,
    apply,
    bracket,
    element,
    format_element,
    is_basis_monomial,
    monomial,
    parse_element,
    pivot_action,
    pivot_bracket,
    power_2k,
    square,
    tau,
    v,
)
from .grading import GoldenInt, Multidegree, gr, weight, weight_coords

__all__ = [
    "Element",
    "FibLieError",
    "GoldenInt",
    "IndexCeilingError",
    "LIMITS",
    "Monomial",
    "MonomialLimitError",
    "Multidegree",
    "ZERO",
    "apply",
    "bracket",
    "element",
    "format_element",
    "gr",
    "is_basis_monomial",
    "monomial",
    "parse_element",
    "pivot_action",
    "pivot_bracket",
    "power_2k",
    "square",
    "tau",
    "v",
    "weight",
    "weight_coords",
]

__version__ = "0.1.0"
