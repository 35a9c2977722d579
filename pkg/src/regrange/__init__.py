"""Exact regularity ranges for Hilbert functions and certified strongly
stable ideal construction."""

from regrange.hilbert import (
    HilbertFunction,
    IntPolynomial,
    gotzmann_number,
    is_admissible,
    parse_hilbert_function,
    parse_polynomial,
)
from regrange.kernels import BACKEND
from regrange.macaulay import MacaulayRep, binomial, growth, macaulay_rep, shrink

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "HilbertFunction",
    "IntPolynomial",
    "MacaulayRep",
    "binomial",
    "gotzmann_number",
    "growth",
    "is_admissible",
    "macaulay_rep",
    "parse_hilbert_function",
    "parse_polynomial",
    "shrink",
    "__version__",
]
