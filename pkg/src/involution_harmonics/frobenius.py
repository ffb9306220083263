"""Three routes to the graded Schur expansion of functions on the locus.

For valid (n, a), all three produce the same SchurPoly:

- graded_frobenius_signed: an inclusion-exclusion of Pieri products of even
  plethysms, truncated by first part, assembled degree by degree;
- graded_frobenius_positive: a manifestly positive count of nonnegative
  stripes per degree;
- graded_frobenius_width: one pass over stripes with even inner of size
  n - a, each contributing at the degree its width dictates.

The ungraded total and the Hilbert series specialize these.
"""

from __future__ import annotations

from .errors import check_locus_params
from .partitions import partitions_of, syt_count
from .schur import (
    QP_ONE,
    QPoly,
    SchurPoly,
    is_nonnegative,
    pieri_mult,
    plethysm_h_h2,
    qp_add,
    qp_shift,
    schur_add,
    schur_shift,
    schur_sub,
    truncate_first_part,
)
from .stripes import even_inner_stripes, nonnegative_family, width


def signed_term(n: int, a: int, d: int) -> SchurPoly:
    """The truncated degree-d difference of consecutive Pieri products."""
    check_locus_params(n, a)
    current = pieri_mult(plethysm_h_h2(d), n - 2 * d)
    previous = pieri_mult(plethysm_h_h2(d - 1), n - 2 * d + 2)
    return truncate_first_part(schur_sub(current, previous), n - 2 * d + a)


def graded_frobenius_signed(n: int, a: int) -> SchurPoly:
    check_locus_params(n, a)
    total: SchurPoly = {}
    for d in range((n - a) // 2 + 1):
        total = schur_add(total, schur_shift(signed_term(n, a, d), d))
    assert is_nonnegative(total), "signed route produced a negative multiplicity"
    assert all(sum(lam) == n for lam in total)
    return total


def graded_frobenius_positive(n: int, a: int) -> SchurPoly:
    check_locus_params(n, a)
    total: SchurPoly = {}
    for d in range((n - a) // 2 + 1):
        cap = n - 2 * d + a
        piece: SchurPoly = {}
        for lam in partitions_of(n, max_first_part=cap):
            count = len(nonnegative_family(lam, d))
            if count:
                piece[lam] = (count,)
        total = schur_add(total, schur_shift(piece, d))
    assert all(sum(lam) == n for lam in total)
    return total


def graded_frobenius_width(n: int, a: int) -> SchurPoly:
    check_locus_params(n, a)
    total: SchurPoly = {}
    for lam in partitions_of(n):
        for s in even_inner_stripes(lam, n - a):
            exponent, remainder = divmod(n + a - width(s), 2)
            assert remainder == 0 and 0 <= exponent <= (n - a) // 2
            total = schur_add(total, {lam: qp_shift(QP_ONE, exponent)})
    assert all(sum(lam) == n for lam in total)
    return total


def frobenius_total(n: int, a: int) -> SchurPoly:
    """The ungraded value: the even plethysm times the degree-a generator."""
    check_locus_params(n, a)
    return pieri_mult(plethysm_h_h2((n - a) // 2), a)


def hilbert_series(f: SchurPoly) -> QPoly:
    """Dimension series: each Schur term contributes its standard-filling count."""
    total: QPoly = ()
    for lam, coeff in f.items():
        total = qp_add(total, tuple(c * syt_count(lam) for c in coeff))
    return total
