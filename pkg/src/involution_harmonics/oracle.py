"""Brute-force ground truth: exact ranks and traces of function spaces on the locus.

Functions on the locus are spanned by evaluations of matrix-entry monomials.
Two pointwise identities shrink the degree-d spanning set to one column per
partial matching with at most d pairs, without changing any span:

- each diagonal entry satisfies x_ii = 1 - (sum of x_ij, j != i), because the
  rows of a permutation matrix sum to 1, so diagonals eliminate at degree one;
- x_ij = x_ji and x_ij^2 = x_ij hold on symmetric 0/1 matrices, so every
  off-diagonal monomial evaluates like a squarefree monomial in the entries
  above the diagonal, which is the indicator of a partial matching, or the
  zero function when its index pairs clash.

Full matchings give the point indicators, so the rank saturates at the locus
size by the top degree; this is asserted, never assumed.  All arithmetic is
exact: integer fraction-free elimination for ranks, Fractions for traces.
"""

from __future__ import annotations

import os
from fractions import Fraction
from functools import cache, lru_cache
from math import factorial, gcd, prod
from typing import NamedTuple

from .errors import (
    InvalidParametersError,
    ResourceLimitError,
    ShapeMismatchError,
    check_locus_params,
)
from .involutions import Involution, conjugate_involution, involutions
from .partitions import Partition, partitions_of
from .schur import QPoly, SchurPoly, qp_normal, schur_terms
from .tableaux import candidate_basis

DEFAULT_SIZE_CAP = 6
SIZE_CAP_ENV = "INVOLUTION_ORACLE_MAX_N"


def oracle_size_cap(explicit: int | None = None) -> int:
    """The largest n the brute force will attempt; env override, else 6."""
    if explicit is not None:
        return explicit
    raw = os.environ.get(SIZE_CAP_ENV)
    return int(raw) if raw else DEFAULT_SIZE_CAP


def _check_cap(n: int, size_cap: int | None) -> None:
    cap = oracle_size_cap(size_cap)
    if n > cap:
        raise ResourceLimitError(
            f"n={n} exceeds the oracle size cap {cap}; raise it explicitly "
            f"or via {SIZE_CAP_ENV}"
        )


def matchings_of_size(n: int, d: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    """All sets of d disjoint unordered pairs from 1..n, smallest-first order."""
    out: list[tuple[tuple[int, int], ...]] = []
    acc: list[tuple[int, int]] = []

    def rec(avail: tuple[int, ...], need: int) -> None:
        if need == 0:
            out.append(tuple(acc))
            return
        if len(avail) < 2 * need:
            return
        i, rest = avail[0], avail[1:]
        rec(rest, need)  # i stays unmatched
        for k in range(len(rest)):
            acc.append((i, rest[k]))
            rec(rest[:k] + rest[k + 1 :], need - 1)
            acc.pop()

    rec(tuple(range(1, n + 1)), d)
    return tuple(out)


def _reduce_column(col: list[int], basis: list[tuple[int, list[int]]]) -> list[int]:
    """Eliminate col against the stored pivots, exactly, over the integers."""
    v = col
    for pivot, pvec in basis:
        c = v[pivot]
        if c:
            p = pvec[pivot]
            v = [p * x - c * y for x, y in zip(v, pvec)]
            g = 0
            for x in v:
                g = gcd(g, x)
            if g > 1:
                v = [x // g for x in v]
    return v


class _EvaluationSpace(NamedTuple):
    points: tuple[Involution, ...]
    index: dict[Involution, int]
    cumulative_ranks: tuple[int, ...]  # after degrees 0, 1, ..., (n-a)/2
    basis_columns: tuple[tuple[int, ...], ...]  # original 0/1 columns, insert order
    pivot_rows: tuple[int, ...]


@lru_cache(maxsize=None)
def _evaluation_space(n: int, a: int) -> _EvaluationSpace:
    points = involutions(n, a)
    pair_sets = [frozenset(w.pairs) for w in points]
    size = len(points)
    basis: list[tuple[int, list[int]]] = []
    basis_columns: list[tuple[int, ...]] = []
    pivot_rows: list[int] = []
    cumulative: list[int] = []
    for d in range((n - a) // 2 + 1):
        if len(basis_columns) < size:
            for m in matchings_of_size(n, d):
                mset = set(m)
                col = [1 if mset <= ps else 0 for ps in pair_sets]
                reduced = _reduce_column(list(col), basis)
                pivot = next((i for i, x in enumerate(reduced) if x), None)
                if pivot is not None:
                    basis.append((pivot, reduced))
                    basis_columns.append(tuple(col))
                    pivot_rows.append(pivot)
                    if len(basis_columns) == size:
                        break
        cumulative.append(len(basis_columns))
    assert cumulative[-1] == size  # full matchings are point indicators
    index = {w: k for k, w in enumerate(points)}
    return _EvaluationSpace(
        points, index, tuple(cumulative), tuple(basis_columns), tuple(pivot_rows)
    )


def graded_hilbert(n: int, a: int, *, size_cap: int | None = None) -> QPoly:
    """Dimensions of the graded pieces, by exact rank increments."""
    check_locus_params(n, a)
    _check_cap(n, size_cap)
    space = _evaluation_space(n, a)
    ranks = space.cumulative_ranks
    return qp_normal(
        [ranks[0]] + [ranks[d] - ranks[d - 1] for d in range(1, len(ranks))]
    )


def _invert_fraction_matrix(mat: list[list[int]]) -> list[list[Fraction]]:
    r = len(mat)
    aug = [
        [Fraction(mat[i][j]) for j in range(r)]
        + [Fraction(int(i == j)) for j in range(r)]
        for i in range(r)
    ]
    for col in range(r):
        pivot = next(i for i in range(col, r) if aug[i][col])
        aug[col], aug[pivot] = aug[pivot], aug[col]
        scale = aug[col][col]
        aug[col] = [x / scale for x in aug[col]]
        for i in range(r):
            if i != col and aug[i][col]:
                factor = aug[i][col]
                aug[i] = [x - factor * y for x, y in zip(aug[i], aug[col])]
    return [row[r:] for row in aug]


def _cycle_type_representative(cycle_type: Partition, n: int) -> tuple[int, ...]:
    """A permutation with consecutive cycles of the given lengths."""
    perm = list(range(1, n + 1))
    start = 1
    for k in cycle_type:
        for i in range(start, start + k - 1):
            perm[i - 1] = i + 1
        perm[start + k - 2] = start
        start += k
    return tuple(perm)


def _inverse_permutation(perm: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(perm)
    for i, image in enumerate(perm, start=1):
        inv[image - 1] = i
    return tuple(inv)


def graded_character(
    n: int, a: int, *, size_cap: int | None = None
) -> list[dict[Partition, int]]:
    """Character of each graded piece under conjugation, keyed by cycle type.

    The group acts on functions by (g.f)(w) = f(g^-1 w g).  Traces on the
    degree filtration come from tr(B^-1 B') where B holds the stored basis
    columns restricted to their pivot rows and B' the same columns permuted
    by the point action; consecutive differences give the graded characters.
    """
    check_locus_params(n, a)
    _check_cap(n, size_cap)
    space = _evaluation_space(n, a)
    classes = partitions_of(n)
    point_action = {}
    for cycle_type in classes:
        rep_inv = _inverse_permutation(_cycle_type_representative(cycle_type, n))
        point_action[cycle_type] = [
            space.index[conjugate_involution(rep_inv, w)] for w in space.points
        ]
    filtration: list[dict[Partition, Fraction]] = []
    previous_rank = -1
    for r in space.cumulative_ranks:
        if r == previous_rank:
            filtration.append(filtration[-1])
            continue
        b = [
            [space.basis_columns[k][pr] for k in range(r)]
            for pr in space.pivot_rows[:r]
        ]
        inverse = _invert_fraction_matrix(b)
        traces: dict[Partition, Fraction] = {}
        for cycle_type in classes:
            sigma = point_action[cycle_type]
            permuted_rows = [sigma[pr] for pr in space.pivot_rows[:r]]
            trace = Fraction(0)
            for k in range(r):
                column = space.basis_columns[k]
                row_inv = inverse[k]
                trace += sum(
                    row_inv[j] * column[permuted_rows[j]] for j in range(r)
                )
            traces[cycle_type] = trace
        filtration.append(traces)
        previous_rank = r
    out: list[dict[Partition, int]] = []
    for d, traces in enumerate(filtration):
        below = filtration[d - 1] if d else {c: Fraction(0) for c in classes}
        piece = {}
        for c in classes:
            value = traces[c] - below[c]
            assert value.denominator == 1
            piece[c] = int(value)
        out.append(piece)
    return out


def conjugation_character(n: int, a: int) -> dict[Partition, int]:
    """Fixed points of conjugation per cycle type; the ungraded character."""
    check_locus_params(n, a)
    points = involutions(n, a)
    out = {}
    for cycle_type in partitions_of(n):
        rep = _cycle_type_representative(cycle_type, n)
        out[cycle_type] = sum(1 for w in points if conjugate_involution(rep, w) == w)
    return out


@cache
def murnaghan_nakayama(shape: Partition, cycle_type: Partition) -> int:
    """Irreducible character value by border strip recursion."""
    if sum(shape) != sum(cycle_type):
        raise ShapeMismatchError(f"{shape} and {cycle_type} have different sizes")
    if not shape:
        return 1
    k, rest = cycle_type[0], cycle_type[1:]
    total = 0
    ell = len(shape)
    beta = [shape[i] + ell - 1 - i for i in range(ell)]
    beta_set = set(beta)
    for b in beta:
        nb = b - k
        if nb < 0 or nb in beta_set:
            continue
        height = sum(1 for c in beta if nb < c < b)
        new_beta = sorted((nb if c == b else c for c in beta), reverse=True)
        new_shape = tuple(c - (ell - 1 - i) for i, c in enumerate(new_beta))
        while new_shape and new_shape[-1] == 0:
            new_shape = new_shape[:-1]
        total += (-1) ** height * murnaghan_nakayama(new_shape, rest)
    return total


def cycle_type_order(cycle_type: Partition) -> int:
    """Centralizer order: product of k^m_k m_k! over the part multiplicities."""
    mult: dict[int, int] = {}
    for k in cycle_type:
        mult[k] = mult.get(k, 0) + 1
    return prod(k**m * factorial(m) for k, m in mult.items())


def frobenius_of_character(chars: list[dict[Partition, int]]) -> SchurPoly:
    """Schur expansion of a list of per-degree characters.

    Multiplicities come from the inner product against the irreducible
    characters; non-integral or negative values raise, since genuine modules
    cannot produce them.
    """
    if not chars or not chars[0]:
        raise InvalidParametersError("need at least one nonempty character")
    n = sum(next(iter(chars[0])))
    out: SchurPoly = {}
    for d, chi in enumerate(chars):
        for lam in partitions_of(n):
            value = sum(
                Fraction(chi[c] * murnaghan_nakayama(lam, c), cycle_type_order(c))
                for c in partitions_of(n)
            )
            if value.denominator != 1 or value < 0:
                raise InvalidParametersError(
                    f"multiplicity of {lam} at degree {d} is {value}, not a "
                    "nonnegative integer"
                )
            if value:
                coeffs = list(out.get(lam, ()))
                coeffs += [0] * (d + 1 - len(coeffs))
                coeffs[d] = int(value)
                out[lam] = tuple(coeffs)
    return out


def oracle_graded_frobenius(
    n: int, a: int, *, size_cap: int | None = None
) -> SchurPoly:
    """Schur expansion of the graded conjugation character, brute force."""
    return frobenius_of_character(graded_character(n, a, size_cap=size_cap))


def verify_monomial_basis(n: int, a: int, *, size_cap: int | None = None) -> dict:
    """Check the candidate monomials against the exact graded dimensions.

    PASS means: per degree the candidate count matches the graded Hilbert
    coefficient, and all candidate evaluation columns taken together are
    linearly independent (hence a basis of the function space).
    """
    check_locus_params(n, a)
    _check_cap(n, size_cap)
    hilbert = graded_hilbert(n, a, size_cap=size_cap)
    candidates = candidate_basis(n, a)
    top = (n - a) // 2
    profile = [0] * (top + 1)
    for d, _ in candidates:
        profile[d] += 1
    failures = []
    for d in range(top + 1):
        expected = hilbert[d] if d < len(hilbert) else 0
        if profile[d] != expected:
            failures.append(
                f"degree {d}: {profile[d]} candidates, expected {expected}"
            )
    monomials = [m for _, m in candidates]
    if len(set(monomials)) != len(monomials):
        failures.append("candidate monomials collide")
    points = involutions(n, a)
    pair_sets = [frozenset(w.pairs) for w in points]
    basis: list[tuple[int, list[int]]] = []
    for d, monomial in sorted(candidates, key=lambda dm: dm[0]):
        col = [1 if set(monomial) <= ps else 0 for ps in pair_sets]
        reduced = _reduce_column(col, basis)
        pivot = next((i for i, x in enumerate(reduced) if x), None)
        if pivot is None:
            failures.append(f"degree {d} monomial {monomial} is dependent")
            break
        basis.append((pivot, reduced))
    while profile and profile[-1] == 0:
        profile.pop()
    report = {
        "n": n,
        "a": a,
        "hilbert": list(hilbert),
        "frobenius": [
            {"partition": list(lam), "coeffs": list(coeff)}
            for lam, coeff in schur_terms(
                oracle_graded_frobenius(n, a, size_cap=size_cap)
            )
        ],
        "basis_check": "PASS" if not failures else "FAIL",
        "profile": profile,
    }
    if failures:
        report["failures"] = failures
    return report
