"""Betti numbers of facet ideals, lcm-lattice complements and subadditivity checks."""

from ._core import (
    Complex,
    FacetBettiError,
    InvariantViolation,
    ParseError,
    PreconditionError,
    ResourceError,
    UniverseMismatch,
    betti,
    complements,
    format_complex,
    parse_complex,
    question_search,
    subadditivity,
    top_degree_betti,
    witness_facet_complement,
    witness_pair,
)

__all__ = [
    "Complex",
    "FacetBettiError",
    "InvariantViolation",
    "ParseError",
    "PreconditionError",
    "ResourceError",
    "UniverseMismatch",
    "betti",
    "complements",
    "format_complex",
    "parse_complex",
    "question_search",
    "subadditivity",
    "top_degree_betti",
    "witness_facet_complement",
    "witness_pair",
]
