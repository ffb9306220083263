"""Exhaustive verification sweeps, shared by the CLI check commands and the tests.

Each check returns (ok, lines): a verdict plus human-readable detail, one line
per parameter point, with failures described in place.
"""

from __future__ import annotations

from typing import Iterator

from .bijections import (
    attach_domino,
    detach_domino,
    first_lowest_point,
    last_lowest_point,
    to_nonnegative_stripe,
    to_width_stripe,
)
from .frobenius import (
    frobenius_total,
    graded_frobenius_positive,
    graded_frobenius_signed,
    graded_frobenius_width,
    hilbert_series,
)
from .involutions import count_involutions
from .partitions import Stripe, partitions_of, stripe_inners
from .schur import qp_at_one, schur_at_one
from .stripes import (
    in_nonnegative_family,
    matched_pairs,
    stripe_family,
    stripe_from_columns,
    stripe_steps,
    width,
    width_by_matching,
    width_by_prefix_sums,
    width_family,
)


def iter_locus_params(max_n: int) -> Iterator[tuple[int, int]]:
    """All valid (n, a) with 1 <= n <= max_n."""
    for n in range(1, max_n + 1):
        for a in range(n % 2, n + 1, 2):
            yield n, a


def iter_stripes_up_to(max_size: int) -> Iterator[Stripe]:
    """Every horizontal stripe whose outer shape has at most max_size boxes."""
    for m in range(max_size + 1):
        for outer in partitions_of(m):
            for inner in stripe_inners(outer):
                yield Stripe(outer, inner)


def check_width(max_size: int = 12) -> tuple[bool, list[str]]:
    """Three width computations agree; paths reconstruct; matching is complete."""
    failures = []
    count = 0
    for s in iter_stripes_up_to(max_size):
        count += 1
        steps = stripe_steps(s)
        w = width(s)
        if not (w == width_by_matching(s) == width_by_prefix_sums(s)):
            failures.append(f"width mismatch on {s}")
        columns = len(steps)
        if not columns <= w <= columns + 2 * (sum(s.outer) - sum(s.inner)):
            failures.append(f"width {w} out of range on {s}")
        pairs = matched_pairs(steps)
        if len(pairs) != sum(s.outer) - sum(s.inner):
            failures.append(f"matching misses ascents on {s}")
        ascents = {j for j, step in enumerate(steps, 1) if step == 1}
        if stripe_from_columns(s.outer, ascents) != s:
            failures.append(f"column reconstruction fails on {s}")
    lines = failures or [f"{count} stripes with outer size <= {max_size}: widths agree"]
    return not failures, lines


def check_formulas(max_n: int = 8) -> tuple[bool, list[str]]:
    """The three routes agree, specialize to the total, and count the locus."""
    ok = True
    lines = []
    for n, a in iter_locus_params(max_n):
        signed = graded_frobenius_signed(n, a)
        positive = graded_frobenius_positive(n, a)
        by_width = graded_frobenius_width(n, a)
        total = frobenius_total(n, a)
        points = count_involutions(n, a)
        problems = []
        if not (signed == positive == by_width):
            problems.append("routes disagree")
        if schur_at_one(by_width) != {lam: qp_at_one(c) for lam, c in total.items()}:
            problems.append("q=1 does not match the ungraded total")
        if qp_at_one(hilbert_series(by_width)) != points:
            problems.append(f"dimensions do not sum to {points}")
        top = (n - a) // 2
        if any(len(coeff) - 1 > top for coeff in by_width.values()):
            problems.append(f"a degree exceeds {top}")
        # the top graded piece truncates to first part <= 2a, so it is empty
        # exactly when a = 0 and n > 0, and populated for every a >= 1
        expected_top = top if a >= 1 or top == 0 else top - 1
        if len(hilbert_series(by_width)) - 1 != expected_top:
            problems.append(f"top populated degree is not {expected_top}")
        if problems:
            ok = False
            lines.append(f"n={n} a={a}: " + "; ".join(problems))
        else:
            lines.append(f"n={n} a={a}: three routes agree, {points} points")
    return ok, lines


def _check_domino_maps(n: int, a: int, d: int, lam) -> list[str]:
    family = stripe_family(lam, d)
    nonneg = [s for s in family if in_nonnegative_family(s, d)]
    below = [s for s in family if not in_nonnegative_family(s, d)]
    previous = stripe_family(lam, d - 1)
    problems = []
    images = []
    for s in below:
        image = detach_domino(s, n, a, d)
        images.append(image)
        if attach_domino(image, n, a, d) != s:
            problems.append(f"attach does not invert detach on {s}")
        if last_lowest_point(image) != first_lowest_point(s) - 2:
            problems.append(f"image lowest point misplaced for {s}")
    if len(set(images)) != len(images) or set(images) != set(previous):
        problems.append(f"domino maps are not a bijection over {lam} at d={d}")
    if len(family) - len(nonneg) != len(previous):
        problems.append(f"family sizes inconsistent over {lam} at d={d}")
    return problems


def _check_shadow_maps(n: int, a: int, d: int, lam) -> list[str]:
    nonneg = [s for s in stripe_family(lam, d) if in_nonnegative_family(s, d)]
    wide = width_family(lam, n, a, d)
    problems = []
    images = []
    for s in nonneg:
        image = to_width_stripe(s, n, a, d)
        images.append(image)
        if to_nonnegative_stripe(image, n, a, d) != s:
            problems.append(f"width maps do not invert on {s}")
    if len(set(images)) != len(images) or set(images) != set(wide):
        problems.append(f"width maps are not a bijection over {lam} at d={d}")
    return problems


def check_bijections(max_n: int = 8) -> tuple[bool, list[str]]:
    """Both bijection pairs invert and exhaust their targets, all shapes swept."""
    ok = True
    lines = []
    for n, a in iter_locus_params(max_n):
        problems = []
        applications = 0
        for d in range((n - a) // 2 + 1):
            for lam in partitions_of(n, max_first_part=n - 2 * d + a):
                if d > 0:
                    problems += _check_domino_maps(n, a, d, lam)
                problems += _check_shadow_maps(n, a, d, lam)
                applications += len(stripe_family(lam, d))
        if problems:
            ok = False
            lines.extend(f"n={n} a={a}: {p}" for p in problems)
        else:
            lines.append(f"n={n} a={a}: bijections verified on {applications} stripes")
    return ok, lines
