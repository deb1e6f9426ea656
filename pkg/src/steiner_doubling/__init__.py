"""Steiner triple systems of order 2^n - 7 by iterated v -> 2v+7 doubling."""

from .constructions import (
    APPENDIX_PHI_TAGS,
    DEFAULT_TRIPLE,
    ConstructionTrace,
    PhiBijection,
    Seed,
    appendix_phi,
    bijection_from_tags,
    build_chain,
    delta_translates,
    double_plus_one,
    double_plus_seven,
    extend_bicoloring,
    extend_independent_set,
    index_bijection,
    parity_split_bijection,
    seed_sts9,
)
from .design import (
    Coloring,
    DifferenceTriple,
    Factor,
    Factorization,
    FactorTag,
    TripleSystem,
    UnionLabeling,
    canonicalize,
    circular_difference,
    relabel_union,
)
from .errors import *  # noqa: F401,F403
from .factorization import (
    circle_method_factorization,
    difference_factorization,
    even_difference_factors,
    half_factor,
    odd_difference_factors,
    reduced_family,
)
from .verification import (
    PairTable,
    VerificationReport,
    bicoloring_spectrum_brute,
    max_independent_brute,
    pair_table,
    upper_chromatic_brute,
    verify_bicoloring,
    verify_factorization,
    verify_independent,
    verify_maximal_independent,
    verify_sts,
    verify_sts_merge,
)

__version__ = "0.1.0"
