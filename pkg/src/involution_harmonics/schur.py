"""Symmetric functions in the Schur basis with integer q-polynomial coefficients.

A QPoly is a tuple of ints, lowest degree first, no trailing zeros; the zero
polynomial is the empty tuple.  A SchurPoly is a dict mapping partitions to
nonzero QPoly values.  Everything is exact integer arithmetic.
"""

from __future__ import annotations

from .errors import InvalidParametersError
from .partitions import Partition, even_partitions_of, horizontal_strips_over

QPoly = tuple[int, ...]
SchurPoly = dict[Partition, QPoly]

QP_ZERO: QPoly = ()
QP_ONE: QPoly = (1,)


def qp(*coeffs: int) -> QPoly:
    return qp_normal(coeffs)


def qp_normal(coeffs) -> QPoly:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def qp_add(f: QPoly, g: QPoly) -> QPoly:
    n = max(len(f), len(g))
    return qp_normal(
        (f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0) for i in range(n)
    )


def qp_neg(f: QPoly) -> QPoly:
    return tuple(-c for c in f)


def qp_shift(f: QPoly, d: int) -> QPoly:
    """Multiply by q**d."""
    return (0,) * d + f if f else QP_ZERO


def qp_at_one(f: QPoly) -> int:
    return sum(f)


def qp_coeff(f: QPoly, d: int) -> int:
    return f[d] if 0 <= d < len(f) else 0


def _accumulate(acc: SchurPoly, lam: Partition, coeff: QPoly) -> None:
    total = qp_add(acc.get(lam, QP_ZERO), coeff)
    if total:
        acc[lam] = total
    else:
        acc.pop(lam, None)


def schur_add(f: SchurPoly, g: SchurPoly) -> SchurPoly:
    out = dict(f)
    for lam, coeff in g.items():
        _accumulate(out, lam, coeff)
    return out


def schur_sub(f: SchurPoly, g: SchurPoly) -> SchurPoly:
    out = dict(f)
    for lam, coeff in g.items():
        _accumulate(out, lam, qp_neg(coeff))
    return out


def schur_shift(f: SchurPoly, d: int) -> SchurPoly:
    return {lam: qp_shift(coeff, d) for lam, coeff in f.items()}


def h_complete(a: int) -> SchurPoly:
    """The complete homogeneous generator of degree a, as a SchurPoly."""
    if a < 0:
        raise InvalidParametersError(f"degree must be nonnegative, got {a}")
    return {(a,) if a else (): QP_ONE}


def pieri_mult(f: SchurPoly, a: int) -> SchurPoly:
    """Multiply by the degree-a complete homogeneous generator.

    Each Schur term spreads over the outer shapes reached by adding a boxes
    with no two in one column.
    """
    if a < 0:
        raise InvalidParametersError(f"degree must be nonnegative, got {a}")
    out: SchurPoly = {}
    for mu, coeff in f.items():
        for lam in horizontal_strips_over(mu, a):
            _accumulate(out, lam, coeff)
    return out


def plethysm_h_h2(d: int) -> SchurPoly:
    """h_d composed with h_2: the multiplicity-free sum of even partitions of 2d.

    d = -1 gives the zero element (the natural base case for the recursions
    that consume this); smaller d is rejected.
    """
    if d < -1:
        raise InvalidParametersError(f"plethysm degree must be >= -1, got {d}")
    if d == -1:
        return {}
    return {lam: QP_ONE for lam in even_partitions_of(2 * d)}


def truncate_first_part(f: SchurPoly, bound: int) -> SchurPoly:
    """Keep only the terms whose partition has first part <= bound."""
    if bound < 0:
        raise InvalidParametersError(f"bound must be nonnegative, got {bound}")
    return {lam: coeff for lam, coeff in f.items() if not lam or lam[0] <= bound}


def schur_at_one(f: SchurPoly) -> dict[Partition, int]:
    """Specialize q = 1, dropping terms that cancel."""
    out = {}
    for lam, coeff in f.items():
        value = qp_at_one(coeff)
        if value:
            out[lam] = value
    return out


def is_nonnegative(f: SchurPoly) -> bool:
    return all(c >= 0 for coeff in f.values() for c in coeff)


def schur_terms(f: SchurPoly) -> list[tuple[Partition, QPoly]]:
    """Terms sorted by partition, decreasing lexicographic; the canonical order."""
    return sorted(f.items(), key=lambda kv: kv[0], reverse=True)
