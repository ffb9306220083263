"""Exact combinatorics of involution matrix loci.

The locus is the set of symmetric 0/1 permutation matrices of size n with a
fixed points.  The package computes the graded Schur expansion of its function
space three independent ways, realizes the bijections behind the formulas,
builds the candidate monomial basis through RSK, and verifies everything with
an exact brute-force oracle.
"""

from .bijections import (
    attach_domino,
    detach_domino,
    first_lowest_point,
    last_lowest_point,
    to_nonnegative_stripe,
    to_width_stripe,
)
from .errors import (
    DomainViolationError,
    InvalidMatrixError,
    InvalidParametersError,
    NotInImageError,
    ResourceLimitError,
    ShapeMismatchError,
)
from .frobenius import (
    frobenius_total,
    graded_frobenius_positive,
    graded_frobenius_signed,
    graded_frobenius_width,
    hilbert_series,
)
from .involutions import Involution, count_involutions, involution, involutions
from .oracle import (
    graded_character,
    graded_hilbert,
    murnaghan_nakayama,
    oracle_graded_frobenius,
    verify_monomial_basis,
)
from .partitions import (
    Partition,
    Stripe,
    conjugate,
    even_partitions_of,
    is_horizontal_stripe,
    partitions_of,
    syt_count,
)
from .schur import h_complete, pieri_mult, plethysm_h_h2, truncate_first_part
from .stripes import matched_pairs, stripe_steps, width
from .tableaux import (
    candidate_basis,
    candidate_monomial,
    involution_tableau_pair,
    reverse_insert_strip,
    row_insert,
    rsk_symmetric,
    rsk_symmetric_inverse,
)

__all__ = [
    "DomainViolationError",
    "InvalidMatrixError",
    "InvalidParametersError",
    "Involution",
    "NotInImageError",
    "Partition",
    "ResourceLimitError",
    "ShapeMismatchError",
    "Stripe",
    "attach_domino",
    "candidate_basis",
    "candidate_monomial",
    "conjugate",
    "count_involutions",
    "detach_domino",
    "even_partitions_of",
    "first_lowest_point",
    "frobenius_total",
    "graded_character",
    "graded_frobenius_positive",
    "graded_frobenius_signed",
    "graded_frobenius_width",
    "graded_hilbert",
    "h_complete",
    "hilbert_series",
    "involution",
    "involution_tableau_pair",
    "involutions",
    "is_horizontal_stripe",
    "last_lowest_point",
    "matched_pairs",
    "murnaghan_nakayama",
    "oracle_graded_frobenius",
    "partitions_of",
    "pieri_mult",
    "plethysm_h_h2",
    "reverse_insert_strip",
    "row_insert",
    "rsk_symmetric",
    "rsk_symmetric_inverse",
    "stripe_steps",
    "syt_count",
    "to_nonnegative_stripe",
    "to_width_stripe",
    "truncate_first_part",
    "verify_monomial_basis",
    "width",
]
