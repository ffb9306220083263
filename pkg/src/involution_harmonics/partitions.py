"""Integer partitions, conjugation, and horizontal stripes.

A partition is a weakly decreasing tuple of positive ints.  A horizontal
stripe outer/inner is a skew shape with at most one box per column.
"""

from __future__ import annotations

from functools import cache
from itertools import product
from math import factorial, prod
from typing import Iterator, NamedTuple

Partition = tuple[int, ...]


class Stripe(NamedTuple):
    """A horizontal stripe, stored as its outer and inner shapes."""

    outer: Partition
    inner: Partition


def as_partition(parts) -> Partition:
    """Normalize an iterable into a partition tuple, trimming trailing zeros."""
    p = tuple(int(x) for x in parts)
    while p and p[-1] == 0:
        p = p[:-1]
    if any(x <= 0 for x in p) or any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"not a partition: {parts!r}")
    return p


def conjugate(p: Partition) -> Partition:
    """Transpose of the diagram: entry j-1 counts the parts of size >= j."""
    if not p:
        return ()
    return tuple(sum(1 for x in p if x >= j) for j in range(1, p[0] + 1))


def contains(outer: Partition, inner: Partition) -> bool:
    if len(inner) > len(outer):
        return False
    return all(inner[i] <= outer[i] for i in range(len(inner)))


def is_even_partition(p: Partition) -> bool:
    return all(x % 2 == 0 for x in p)


def is_horizontal_stripe(outer: Partition, inner: Partition) -> bool:
    """True iff inner fits inside outer with at most one box left per column."""
    if not contains(outer, inner):
        return False
    oc, ic = conjugate(outer), conjugate(inner)
    return all(oc[j] - (ic[j] if j < len(ic) else 0) <= 1 for j in range(len(oc)))


@cache
def partitions_of(n: int, max_first_part: int | None = None) -> tuple[Partition, ...]:
    """All partitions of n, decreasing lexicographic, optionally capping the first part."""
    if n < 0:
        return ()
    bound = n if max_first_part is None else min(n, max_first_part)
    if n == 0:
        return ((),)
    out = []
    for first in range(bound, 0, -1):
        out.extend((first,) + rest for rest in partitions_of(n - first, first))
    return tuple(out)


def even_partitions_of(n: int) -> tuple[Partition, ...]:
    """Partitions of n with all parts even; empty for odd n."""
    if n % 2:
        return ()
    return tuple(tuple(2 * x for x in p) for p in partitions_of(n // 2))


def syt_count(p: Partition) -> int:
    """Number of standard fillings of the shape, by the hook length product."""
    conj = conjugate(p)
    hooks = prod(
        row - j + conj[j] - i - 1 for i, row in enumerate(p) for j in range(row)
    )
    return factorial(sum(p)) // hooks


def even_inner_stripes(outer: Partition, inner_size: int) -> tuple[Stripe, ...]:
    """Stripes over `outer` whose inner shape is an even partition of `inner_size`."""
    if inner_size % 2:
        return ()
    return tuple(
        Stripe(outer, mu)
        for mu in even_partitions_of(inner_size)
        if is_horizontal_stripe(outer, mu)
    )


def horizontal_strips_over(inner: Partition, size: int) -> Iterator[Partition]:
    """Outer shapes reached from `inner` by adding `size` boxes, no two per column.

    Yields in decreasing lexicographic order.
    """
    rows = len(inner)
    acc: list[int] = []

    def rec(i: int, remaining: int) -> Iterator[Partition]:
        if i == rows:
            if remaining == 0:
                yield tuple(acc)
            elif remaining <= (inner[-1] if rows else remaining):
                acc.append(remaining)
                yield tuple(acc)
                acc.pop()
            return
        low = inner[i]
        high = min(inner[i - 1] if i else low + remaining, low + remaining)
        for part in range(high, low - 1, -1):
            acc.append(part)
            yield from rec(i + 1, remaining - (part - low))
            acc.pop()

    yield from rec(0, size)


def stripe_inners(outer: Partition) -> Iterator[Partition]:
    """Inner shapes mu with outer/mu a horizontal stripe, decreasing lexicographic."""
    if not outer:
        yield ()
        return
    # row i of the inner may end anywhere between the next outer row and this one
    ranges = [
        range(outer[i], (outer[i + 1] if i + 1 < len(outer) else 0) - 1, -1)
        for i in range(len(outer))
    ]
    for combo in product(*ranges):
        p = combo
        while p and p[-1] == 0:
            p = p[:-1]
        yield p
