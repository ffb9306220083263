"""Row insertion, RSK for symmetric 0/1 matrices, and the candidate monomial basis.

Tableaux are tuples of tuples of ints, rows weakly increasing left to right,
columns strictly increasing top to bottom.  RSK is implemented for general
nonnegative-integer matrices through the sorted two-line array and then
specialized to the symmetric zero-diagonal case, where the insertion and
recording tableaux coincide and the shape has even column lengths.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from functools import cache

from .errors import (
    DomainViolationError,
    InvalidMatrixError,
    NotInImageError,
    ShapeMismatchError,
    check_locus_params,
)
from .involutions import Involution, involution, involutions
from .partitions import (
    Partition,
    Stripe,
    conjugate,
    is_even_partition,
    is_horizontal_stripe,
    partitions_of,
)
from .stripes import nonnegative_family

Rows = tuple[tuple[int, ...], ...]


def shape(t: Rows) -> Partition:
    return tuple(len(row) for row in t)


def transpose_tableau(t: Rows) -> Rows:
    if not t:
        return ()
    return tuple(
        tuple(t[i][j] for i in range(len(t)) if len(t[i]) > j)
        for j in range(len(t[0]))
    )


def is_standard_on_content(t: Rows) -> bool:
    """Distinct entries, rows and columns strictly increasing."""
    entries = [x for row in t for x in row]
    if len(set(entries)) != len(entries):
        return False
    for row in t:
        if any(row[i] >= row[i + 1] for i in range(len(row) - 1)):
            return False
    for i in range(1, len(t)):
        if len(t[i]) > len(t[i - 1]):
            return False
        if any(t[i - 1][j] >= t[i][j] for j in range(len(t[i]))):
            return False
    return True


def row_insert(t: Rows, value: int) -> tuple[Rows, tuple[int, int]]:
    """Schensted row insertion.  Returns the new tableau and the box it grew."""
    rows = list(t)
    v = value
    for r, row in enumerate(rows):
        k = bisect_right(row, v)
        if k == len(row):
            rows[r] = row + (v,)
            return tuple(rows), (r, k)
        rows[r], v = row[:k] + (v,) + row[k + 1 :], row[k]
    return tuple(rows) + ((v,),), (len(rows), 0)


def reverse_row_insert(t: Rows, row_index: int) -> tuple[Rows, int]:
    """Inverse insertion starting from the last box of the given row.

    The box must be a removable corner; the bumped-out value is returned.
    """
    rows = list(t)
    if row_index + 1 < len(rows) and len(rows[row_index + 1]) >= len(rows[row_index]):
        raise ShapeMismatchError(f"row {row_index} has no removable corner")
    row = rows[row_index]
    v = row[-1]
    rows[row_index] = row[:-1]
    for r in range(row_index - 1, -1, -1):
        row = rows[r]
        k = bisect_left(row, v) - 1  # rightmost entry strictly below v
        assert k >= 0
        rows[r], v = row[:k] + (v,) + row[k + 1 :], row[k]
    if rows and not rows[-1]:
        rows.pop()
    return tuple(rows), v


def reverse_insert_strip(t: Rows, strip: Stripe) -> tuple[Rows, tuple[int, ...]]:
    """Push an entire horizontal strip back out, rightmost column first.

    Returns the shrunken tableau of shape strip.inner and the extracted values
    in extraction order.  Re-inserting the values in increasing order restores
    the original tableau.
    """
    if shape(t) != strip.outer:
        raise ShapeMismatchError(f"tableau shape {shape(t)} is not {strip.outer}")
    if not is_horizontal_stripe(strip.outer, strip.inner):
        raise ShapeMismatchError(f"{strip} is not a horizontal stripe")
    inner = strip.inner + (0,) * (len(strip.outer) - len(strip.inner))
    cells = [
        (r, c)
        for r, row_len in enumerate(strip.outer)
        for c in range(inner[r] + 1, row_len + 1)
    ]
    cells.sort(key=lambda rc: -rc[1])
    out, values = t, []
    for r, c in cells:
        assert len(out[r]) == c  # strip boxes leave in corner order
        out, v = reverse_row_insert(out, r)
        values.append(v)
    assert shape(out) == strip.inner
    return out, tuple(values)


def rsk(biletters) -> tuple[Rows, Rows]:
    """Row-insertion correspondence on a multiset of (row, column) biletters."""
    p: Rows = ()
    q: Rows = ()
    for top, bottom in sorted(biletters):
        p, (r, c) = row_insert(p, bottom)
        rows = list(q)
        if r == len(rows):
            rows.append(())
        assert len(rows[r]) == c
        rows[r] = rows[r] + (top,)
        q = tuple(rows)
    return p, q


def rsk_inverse(p: Rows, q: Rows) -> list[tuple[int, int]]:
    """Invert rsk when the recording tableau has distinct entries."""
    if shape(p) != shape(q):
        raise ShapeMismatchError(f"shapes {shape(p)} and {shape(q)} differ")
    entries = sorted((x for row in q for x in row), reverse=True)
    if len(set(entries)) != len(entries):
        raise NotInImageError("recording tableau entries must be distinct")
    biletters = []
    for value in entries:
        r = next(i for i, row in enumerate(q) if value in row)
        assert q[r][-1] == value  # the largest remaining entry sits at a corner
        rows = list(q)
        rows[r] = rows[r][:-1]
        if rows and not rows[-1]:
            rows.pop()
        q = tuple(rows)
        p, v = reverse_row_insert(p, r)
        biletters.append((value, v))
    return biletters[::-1]


def _symmetric_ones(matrix) -> frozenset[tuple[int, int]]:
    """Normalize a dense 0/1 matrix or a set of positions; validate symmetry."""
    if isinstance(matrix, (set, frozenset)):
        ones = set(matrix)
        if not all(
            isinstance(c, tuple) and len(c) == 2 and all(isinstance(x, int) for x in c)
            for c in ones
        ):
            raise InvalidMatrixError("positions must be integer pairs")
    else:
        ones = set()
        rows = [tuple(row) for row in matrix]
        if any(len(row) != len(rows) for row in rows):
            raise InvalidMatrixError("matrix must be square")
        for i, row in enumerate(rows):
            for j, entry in enumerate(row):
                if entry not in (0, 1):
                    raise InvalidMatrixError(f"entry {entry!r} is not 0 or 1")
                if entry:
                    ones.add((i + 1, j + 1))
    if any(i == j for i, j in ones):
        raise InvalidMatrixError("diagonal must be zero")
    if any((j, i) not in ones for i, j in ones):
        raise InvalidMatrixError("matrix must be symmetric")
    return frozenset(ones)


def rsk_symmetric(matrix) -> Rows:
    """Insertion tableau of a symmetric 0/1 zero-diagonal matrix.

    Accepts a dense square matrix or a set of 1-based positions.  The
    recording tableau always equals the insertion tableau here, and the zero
    diagonal forces every column length of the shape to be even.
    """
    ones = _symmetric_ones(matrix)
    p, q = rsk(ones)
    assert p == q
    assert is_even_partition(conjugate(shape(p)))
    return p


def rsk_symmetric_inverse(p: Rows) -> frozenset[tuple[int, int]]:
    """The unique symmetric 0/1 zero-diagonal matrix whose tableau is p.

    Returned as the set of 1-based one-positions.  Raises NotInImageError when
    some column length of the shape is odd (no zero-diagonal preimage exists).
    """
    if not is_standard_on_content(p):
        raise NotInImageError("tableau must be standard on its content")
    if not is_even_partition(conjugate(shape(p))):
        raise NotInImageError(f"shape {shape(p)} has an odd column")
    ones = frozenset(rsk_inverse(p, p))
    assert all(i != j for i, j in ones)
    assert all((j, i) in ones for i, j in ones)
    return ones


def involution_tableau_pair(w: Involution) -> tuple[Rows, Stripe]:
    """Insert the matched pairs symmetrically, then the fixed points on top.

    Returns the full tableau and the horizontal stripe its shape forms over
    the shape of the pairs-only tableau.
    """
    w = involution(w.n, w.pairs, w.fixed)
    ones = frozenset(cell for i, j in w.pairs for cell in ((i, j), (j, i)))
    p = rsk_symmetric(ones)
    q = p
    for v in w.fixed:
        q, _ = row_insert(q, v)
    lam, nu = shape(q), shape(p)
    assert is_horizontal_stripe(lam, nu)
    return q, Stripe(lam, nu)


@cache
def standard_tableaux(p: Partition) -> tuple[Rows, ...]:
    """All standard fillings of the shape, deterministic order."""
    n = sum(p)
    out: list[Rows] = []
    rows: list[list[int]] = [[] for _ in p]

    def place(v: int) -> None:
        if v > n:
            out.append(tuple(tuple(r) for r in rows))
            return
        for i, row in enumerate(rows):
            if len(row) < p[i] and (i == 0 or len(rows[i - 1]) > len(row)):
                row.append(v)
                place(v + 1)
                row.pop()

    place(1)
    return tuple(out)


def candidate_monomial(p: Rows, strip: Stripe) -> tuple[tuple[int, int], ...]:
    """The matching monomial attached to a standard tableau and an index stripe.

    Pushes the strip out of p, transposes the remainder (whose shape then has
    even columns), and reads the matched pairs off the symmetric preimage.
    The result is a sorted tuple of disjoint (i, j) pairs with i < j; its
    length is the degree.
    """
    if shape(p) != strip.outer:
        raise ShapeMismatchError(f"tableau shape {shape(p)} is not {strip.outer}")
    rest, _ = reverse_insert_strip(p, strip)
    if not is_even_partition(shape(rest)):
        raise DomainViolationError(f"inner shape {shape(rest)} is not even")
    ones = rsk_symmetric_inverse(transpose_tableau(rest))
    pairs = sorted({(min(i, j), max(i, j)) for i, j in ones})
    assert 2 * len(pairs) == len(ones)
    assert len({x for pr in pairs for x in pr}) == 2 * len(pairs)
    return tuple(pairs)


def candidate_basis(n: int, a: int) -> list[tuple[int, tuple[tuple[int, int], ...]]]:
    """Every (degree, monomial) the stripe indexing produces, deterministic order."""
    check_locus_params(n, a)
    out = []
    for d in range((n - a) // 2 + 1):
        cap = n - 2 * d + a
        for lam in partitions_of(n, max_first_part=cap):
            for s in nonnegative_family(lam, d):
                for p in standard_tableaux(lam):
                    out.append((d, candidate_monomial(p, s)))
    return out


def image_width_distribution(n: int, a: int) -> dict[int, int]:
    """How often each width occurs among the stripe images of the involutions."""
    from .stripes import width

    counts: dict[int, int] = {}
    for w in involutions(n, a):
        _, s = involution_tableau_pair(w)
        counts[width(s)] = counts.get(width(s), 0) + 1
    return dict(sorted(counts.items()))
