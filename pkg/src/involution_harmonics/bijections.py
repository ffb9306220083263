"""Bijections between the stripe families indexing the graded pieces.

Two pairs of mutually inverse maps, both acting through the stripe's path:

- detach_domino / attach_domino relate the degree-d family minus its
  nonnegative part to the degree-(d-1) family, by removing or restoring a
  horizontal domino of the inner shape at the lowest point of the path;
- to_width_stripe / to_nonnegative_stripe relate the nonnegative degree-d
  family to the stripes of width n - 2d + a with even inner of size n - a,
  through the ascent-descent matching.

All maps validate their domain and assert the constructed image lands where
it must, so a misreading fails loudly instead of corrupting a sweep.
"""

from __future__ import annotations

from .errors import DomainViolationError, InvalidParametersError, check_degree_params
from .partitions import Stripe
from .stripes import (
    in_nonnegative_family,
    in_stripe_family,
    in_width_family,
    matched_pairs,
    steps_heights,
    stripe_from_columns,
    stripe_steps,
)


def _ascent_columns(steps) -> set[int]:
    return {j for j, step in enumerate(steps, start=1) if step == 1}


def _check_window(s: Stripe, n: int, a: int, d: int) -> int:
    window = n - 2 * d + a
    if s.outer and s.outer[0] > window:
        raise DomainViolationError(
            f"outer shape {s.outer} is wider than the window {window}"
        )
    return window


def detach_domino(s: Stripe, n: int, a: int, d: int) -> Stripe:
    """Remove a horizontal domino from the inner shape at the first lowest point.

    Defined on degree-d stripes whose path dips below the axis.  The two
    descents reaching the first lowest point turn into ascents, producing a
    degree-(d-1) stripe over the same outer shape.  The construction never
    needs the outer shape to fit in n - 2d + a columns; that bound is the
    sweeps' business, not this map's.
    """
    check_degree_params(n, a, d)
    if d == 0:
        raise InvalidParametersError("degree must be positive, nothing to detach at d=0")
    if not in_stripe_family(s, d):
        raise DomainViolationError(f"{s} is not a degree-{d} stripe")
    steps = stripe_steps(s)
    heights = steps_heights(steps)
    low = min(heights)
    if low >= 0:
        raise DomainViolationError(f"{s} never dips below the axis")
    m = heights.index(low)
    # the two steps into the first lowest point are both descents
    assert m >= 2 and steps[m - 2] == -1 and steps[m - 1] == -1
    image = stripe_from_columns(s.outer, _ascent_columns(steps) | {m - 1, m})
    assert in_stripe_family(image, d - 1)
    return image


def attach_domino(s: Stripe, n: int, a: int, d: int) -> Stripe:
    """Restore a horizontal domino to the inner shape at the last lowest point.

    Inverse of detach_domino: defined on degree-(d-1) stripes whose last
    lowest point leaves two stored steps after it to turn downward.  Outer
    shapes wider than n - 2d + a columns can place the lowest point too far
    right for that; this map rejects such stripes instead of assuming the
    bound up front.
    """
    check_degree_params(n, a, d)
    if d == 0:
        raise InvalidParametersError("degree must be positive, nothing to attach at d=0")
    if not in_stripe_family(s, d - 1):
        raise DomainViolationError(f"{s} is not a degree-{d - 1} stripe")
    steps = stripe_steps(s)
    heights = steps_heights(steps)
    low = min(heights)
    m = len(heights) - 1 - heights[::-1].index(low)
    if m > len(steps) - 2:
        raise DomainViolationError(
            f"last lowest point of {s} sits at x={m}, no room for a domino"
        )
    # the two steps leaving the last lowest point are both ascents
    assert steps[m] == 1 and steps[m + 1] == 1
    image = stripe_from_columns(s.outer, _ascent_columns(steps) - {m + 1, m + 2})
    assert in_stripe_family(image, d) and not in_nonnegative_family(image, d)
    return image


def to_width_stripe(s: Stripe, n: int, a: int, d: int) -> Stripe:
    """Send a nonnegative degree-d stripe to its width-(n - 2d + a) companion.

    The image occupies exactly the ascent columns whose matched descent falls
    within the first n - 2d + a steps; there are a of them, and the resulting
    stripe has even inner of size n - a and width exactly n - 2d + a.
    """
    check_degree_params(n, a, d)
    if not in_nonnegative_family(s, d):
        raise DomainViolationError(f"{s} is not a nonnegative degree-{d} stripe")
    window = _check_window(s, n, a, d)
    steps = stripe_steps(s)
    kept = {i for i, j in matched_pairs(steps) if j <= window}
    image = stripe_from_columns(s.outer, kept)
    assert len(kept) == a
    assert in_width_family(image, n, a, d)
    return image


def to_nonnegative_stripe(s: Stripe, n: int, a: int, d: int) -> Stripe:
    """Send a width-(n - 2d + a) stripe back to its nonnegative degree-d companion.

    Inverse of to_width_stripe.  The image occupies the columns of the window
    [1, n - 2d + a] that are not matched descents of the input path; the width
    hypothesis forces all of them inside the stored prefix.
    """
    if not in_width_family(s, n, a, d):
        raise DomainViolationError(f"{s} does not have width {n - 2 * d + a}")
    window = _check_window(s, n, a, d)
    steps = stripe_steps(s)
    descents = {j for _, j in matched_pairs(steps)}
    # tail descents fill every position from the prefix end to the width,
    # so the kept columns all land inside the stored prefix
    assert set(range(len(steps) + 1, window + 1)) <= descents
    kept = set(range(1, window + 1)) - descents
    image = stripe_from_columns(s.outer, kept)
    assert in_nonnegative_family(image, d)
    return image


def last_lowest_point(s: Stripe) -> int:
    """x-coordinate of the last minimum of the stored prefix heights."""
    heights = steps_heights(stripe_steps(s))
    return len(heights) - 1 - heights[::-1].index(min(heights))


def first_lowest_point(s: Stripe) -> int:
    """x-coordinate of the first minimum of the stored prefix heights."""
    heights = steps_heights(stripe_steps(s))
    return heights.index(min(heights))
