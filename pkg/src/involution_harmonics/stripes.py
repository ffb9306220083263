"""Step paths of horizontal stripes: matching, width, and the indexing families.

Every horizontal stripe outer/inner determines a lattice path read off the
columns of the outer shape: column j contributes an ascent when it meets the
stripe and a descent otherwise, and the path continues with descents forever
past the last column.  Only the first len(conjugate(outer)) steps are stored;
the descent tail is implicit.
"""

from __future__ import annotations

from .errors import DomainViolationError, check_degree_params
from .partitions import (
    Partition,
    Stripe,
    conjugate,
    even_inner_stripes,
    is_even_partition,
    is_horizontal_stripe,
)

Steps = tuple[int, ...]  # +1 ascent, -1 descent, one entry per column of the outer shape

_STEP_CHARS = {1: "N", -1: "S"}


def stripe_steps(s: Stripe) -> Steps:
    """The stored prefix of the stripe's path, one step per column of the outer shape."""
    oc, ic = conjugate(s.outer), conjugate(s.inner)
    return tuple(
        1 if oc[j] - (ic[j] if j < len(ic) else 0) == 1 else -1 for j in range(len(oc))
    )


def steps_heights(steps: Steps) -> tuple[int, ...]:
    """Running heights y(0), ..., y(len(steps)) of the prefix, starting at 0."""
    heights = [0]
    for step in steps:
        heights.append(heights[-1] + step)
    return tuple(heights)


def steps_to_string(steps: Steps) -> str:
    return "".join(_STEP_CHARS[s] for s in steps)


def steps_from_string(text: str) -> Steps:
    try:
        return tuple({"N": 1, "S": -1}[c] for c in text)
    except KeyError:
        raise ValueError(f"path strings use the alphabet N/S, got {text!r}") from None


def stripe_from_columns(outer: Partition, columns) -> Stripe:
    """The stripe over `outer` whose occupied columns are exactly `columns`.

    Raises DomainViolationError when no horizontal stripe has that column set
    (a removed box must leave a partition shape behind).
    """
    oc = conjugate(outer)
    cols = set(columns)
    if not all(isinstance(c, int) and 1 <= c <= len(oc) for c in cols):
        raise DomainViolationError(
            f"columns {sorted(cols)!r} do not all index columns of {outer}"
        )
    ic = [oc[j] - 1 if j + 1 in cols else oc[j] for j in range(len(oc))]
    if any(ic[j] < ic[j + 1] for j in range(len(ic) - 1)):
        raise DomainViolationError(
            f"columns {sorted(cols)!r} leave no partition shape inside {outer}"
        )
    while ic and ic[-1] == 0:
        ic.pop()
    return Stripe(outer, conjugate(tuple(ic)))


def matched_pairs(steps: Steps) -> list[tuple[int, int]]:
    """Match each ascent i with the first later descent j returning to its level.

    Step indices are 1-based.  Descents in the implicit tail close any ascents
    still open at the end of the prefix, innermost first, at positions
    len(steps)+1, len(steps)+2, ...
    """
    pairs = []
    stack: list[int] = []
    for j, step in enumerate(steps, start=1):
        if step == 1:
            stack.append(j)
        elif stack:
            pairs.append((stack.pop(), j))
    for offset, i in enumerate(reversed(stack), start=1):
        pairs.append((i, len(steps) + offset))
    return sorted(pairs)


def width(s: Stripe) -> int:
    """Horizontal extent of the stripe's matching.

    Equals the largest descent position used by matched_pairs, but never less
    than the column count of the outer shape.  Computed in closed form: the
    number of ascents still open at the end of the prefix is
    y(end) - min(y), and they close one tail step apiece.
    """
    steps = stripe_steps(s)
    heights = steps_heights(steps)
    return len(steps) + heights[-1] - min(heights)


def width_by_matching(s: Stripe) -> int:
    """Width directly from the matching; retained as a cross-check for width()."""
    pairs = matched_pairs(stripe_steps(s))
    return max(len(stripe_steps(s)), max((j for _, j in pairs), default=0))


def width_by_prefix_sums(s: Stripe) -> int:
    """Width from the reversed column word; retained as a cross-check for width().

    Reading the columns right to left as +1/-1 and tracking the running sum,
    the width exceeds the column count by the largest nonnegative prefix sum.
    """
    best = running = 0
    steps = stripe_steps(s)
    for step in reversed(steps):
        running += step
        best = max(best, running)
    return len(steps) + best


def in_stripe_family(s: Stripe, d: int) -> bool:
    """True iff s is a horizontal stripe whose inner shape is even of size 2d."""
    return (
        is_horizontal_stripe(s.outer, s.inner)
        and is_even_partition(s.inner)
        and sum(s.inner) == 2 * d
    )


def in_nonnegative_family(s: Stripe, d: int) -> bool:
    """True iff s is in the degree-d family and its stored prefix never dips below 0."""
    if not in_stripe_family(s, d):
        return False
    return min(steps_heights(stripe_steps(s))) >= 0


def in_width_family(s: Stripe, n: int, a: int, d: int) -> bool:
    """True iff s has even inner of size n - a and width exactly n - 2d + a."""
    check_degree_params(n, a, d)
    return (
        is_horizontal_stripe(s.outer, s.inner)
        and is_even_partition(s.inner)
        and sum(s.inner) == n - a
        and width(s) == n - 2 * d + a
    )


def stripe_family(outer: Partition, d: int) -> tuple[Stripe, ...]:
    """All stripes over `outer` with even inner of size 2d."""
    return even_inner_stripes(outer, 2 * d)


def nonnegative_family(outer: Partition, d: int) -> tuple[Stripe, ...]:
    return tuple(s for s in stripe_family(outer, d) if in_nonnegative_family(s, d))


def width_family(outer: Partition, n: int, a: int, d: int) -> tuple[Stripe, ...]:
    check_degree_params(n, a, d)
    return tuple(
        s for s in even_inner_stripes(outer, n - a) if width(s) == n - 2 * d + a
    )
