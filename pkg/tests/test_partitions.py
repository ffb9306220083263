"""Partition primitives against independent recursions and brute force."""

from math import factorial

import pytest
from hypothesis import given, strategies as st

from involution_harmonics.partitions import (
    as_partition,
    conjugate,
    contains,
    even_inner_stripes,
    even_partitions_of,
    horizontal_strips_over,
    is_even_partition,
    is_horizontal_stripe,
    partitions_of,
    stripe_inners,
    syt_count,
)

partition_st = st.lists(st.integers(1, 10), max_size=7).map(
    lambda xs: tuple(sorted(xs, reverse=True))
)


def test_as_partition_normalizes():
    assert as_partition([3, 2, 0, 0]) == (3, 2)
    assert as_partition(()) == ()
    with pytest.raises(ValueError):
        as_partition([2, 3])
    with pytest.raises(ValueError):
        as_partition([1, -1])


def test_conjugate_values():
    assert conjugate((7, 4, 4, 2)) == (4, 4, 3, 3, 1, 1, 1)
    assert conjugate(()) == ()
    assert conjugate((1,)) == (1,)
    assert conjugate((5,)) == (1, 1, 1, 1, 1)


@given(partition_st)
def test_conjugate_is_an_involution(p):
    assert conjugate(conjugate(p)) == p
    assert sum(conjugate(p)) == sum(p)


def euler_partition_count(n):
    # pentagonal number recurrence, entirely separate from the enumerator
    counts = [1]
    for m in range(1, n + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            g2 = k * (3 * k + 1) // 2
            if g1 > m and g2 > m:
                break
            sign = -1 if k % 2 == 0 else 1
            if g1 <= m:
                total += sign * counts[m - g1]
            if g2 <= m:
                total += sign * counts[m - g2]
            k += 1
        counts.append(total)
    return counts[n]


@pytest.mark.parametrize("n", range(0, 26))
def test_partition_counts_match_recurrence(n):
    assert len(partitions_of(n)) == euler_partition_count(n)


def test_partitions_are_canonical():
    for n in range(9):
        ps = partitions_of(n)
        assert len(set(ps)) == len(ps)
        for p in ps:
            assert sum(p) == n
            assert all(p[i] >= p[i + 1] for i in range(len(p) - 1))
            assert all(x > 0 for x in p)
        assert list(ps) == sorted(ps, reverse=True)


def test_partitions_first_part_cap():
    for n in range(9):
        for cap in range(n + 2):
            capped = partitions_of(n, max_first_part=cap)
            expected = tuple(p for p in partitions_of(n) if not p or p[0] <= cap)
            assert capped == expected


def test_even_partitions():
    assert even_partitions_of(3) == ()
    assert even_partitions_of(0) == ((),)
    assert even_partitions_of(4) == ((4,), (2, 2))
    for n in range(0, 13, 2):
        evens = even_partitions_of(n)
        assert all(is_even_partition(p) for p in evens)
        assert set(evens) == {p for p in partitions_of(n) if is_even_partition(p)}


def syt_count_by_corner_removal(p):
    # f(shape) = sum of f(shape minus one removable corner)
    if not p:
        return 1
    total = 0
    for i in range(len(p)):
        if i + 1 == len(p) or p[i] > p[i + 1]:
            smaller = p[:i] + ((p[i] - 1,) if p[i] > 1 else ()) + p[i + 1 :]
            total += syt_count_by_corner_removal(smaller)
    return total


def test_syt_count_values():
    assert syt_count(()) == 1
    assert syt_count((2, 1)) == 2
    assert syt_count((3, 1)) == 3
    assert syt_count((2, 2)) == 2
    assert syt_count((3, 2)) == 5
    assert syt_count((4,)) == 1
    assert syt_count((1, 1, 1, 1)) == 1


def test_syt_count_matches_corner_recursion():
    for n in range(9):
        for p in partitions_of(n):
            assert syt_count(p) == syt_count_by_corner_removal(p)


@pytest.mark.parametrize("n", range(1, 11))
def test_syt_squares_sum_to_factorial(n):
    assert sum(syt_count(p) ** 2 for p in partitions_of(n)) == factorial(n)


def test_horizontal_stripe_matches_interlacing():
    # one box per column is the same as mu_i >= lam_{i+1} row interlacing
    for n in range(11):
        for lam in partitions_of(n):
            for m in range(n + 1):
                for mu in partitions_of(m):
                    interlaced = contains(lam, mu) and all(
                        lam[i + 1] <= (mu[i] if i < len(mu) else 0)
                        for i in range(len(lam) - 1)
                    )
                    assert is_horizontal_stripe(lam, mu) == interlaced


def test_horizontal_strips_over_values():
    assert list(horizontal_strips_over((1,), 2)) == [(3,), (2, 1)]
    assert list(horizontal_strips_over((2, 1), 2)) == [
        (4, 1),
        (3, 2),
        (3, 1, 1),
        (2, 2, 1),
    ]
    assert list(horizontal_strips_over((), 3)) == [(3,)]
    assert list(horizontal_strips_over((2, 2), 0)) == [(2, 2)]


def test_horizontal_strips_over_is_exhaustive():
    for m in range(7):
        for mu in partitions_of(m):
            for size in range(5):
                got = list(horizontal_strips_over(mu, size))
                expected = [
                    lam
                    for lam in partitions_of(m + size)
                    if is_horizontal_stripe(lam, mu)
                ]
                assert sorted(got, reverse=True) == expected
                assert got == sorted(got, reverse=True)


def test_stripe_inners_is_exhaustive():
    for n in range(9):
        for lam in partitions_of(n):
            got = list(stripe_inners(lam))
            expected = [
                mu
                for m in range(n + 1)
                for mu in partitions_of(m)
                if is_horizontal_stripe(lam, mu)
            ]
            assert sorted(got) == sorted(expected)
            assert len(set(got)) == len(got)


def test_even_inner_stripes():
    assert even_inner_stripes((3, 1), 3) == ()
    stripes = even_inner_stripes((3, 1), 2)
    assert [s.inner for s in stripes] == [(2,)]
    assert all(s.outer == (3, 1) for s in stripes)
    for lam in partitions_of(6):
        for size in range(0, 7, 2):
            inners = {s.inner for s in even_inner_stripes(lam, size)}
            expected = {
                mu
                for mu in partitions_of(size)
                if is_even_partition(mu) and is_horizontal_stripe(lam, mu)
            }
            assert inners == expected
