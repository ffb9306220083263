"""The locus: involutions of 1..n with a prescribed number of fixed points,
viewed as symmetric 0/1 permutation matrices."""

from __future__ import annotations

from math import factorial
from typing import NamedTuple

from .errors import check_locus_params


class Involution(NamedTuple):
    """An involution of 1..n: sorted disjoint transpositions plus fixed points."""

    n: int
    pairs: tuple[tuple[int, int], ...]
    fixed: tuple[int, ...]


def involution(n: int, pairs, fixed=None) -> Involution:
    """Build and validate an involution from its transpositions.

    Fixed points default to the letters not covered by any pair.
    """
    norm = tuple(sorted(tuple(sorted(p)) for p in pairs))
    covered = [x for p in norm for x in p]
    if len(set(covered)) != len(covered):
        raise ValueError(f"pairs {pairs!r} are not disjoint")
    if any(x < 1 or x > n for x in covered):
        raise ValueError(f"pairs {pairs!r} do not fit inside 1..{n}")
    rest = tuple(x for x in range(1, n + 1) if x not in set(covered))
    if fixed is not None and tuple(sorted(fixed)) != rest:
        raise ValueError(f"fixed points {fixed!r} disagree with pairs {pairs!r}")
    return Involution(n, norm, rest)


def count_involutions(n: int, a: int) -> int:
    """n! / (2^k k! a!) where k = (n - a) / 2."""
    check_locus_params(n, a)
    k = (n - a) // 2
    return factorial(n) // (2**k * factorial(k) * factorial(a))


def involutions(n: int, a: int) -> tuple[Involution, ...]:
    """All involutions of 1..n with exactly a fixed points, deterministic order."""
    check_locus_params(n, a)
    out: list[Involution] = []
    pairs: list[tuple[int, int]] = []
    fixed: list[int] = []

    def build(rest: tuple[int, ...], fixed_left: int) -> None:
        if fixed_left > len(rest):
            return
        if not rest:
            out.append(Involution(n, tuple(pairs), tuple(fixed)))
            return
        i, tail = rest[0], rest[1:]
        if fixed_left:
            fixed.append(i)
            build(tail, fixed_left - 1)
            fixed.pop()
        for k in range(len(tail)):
            pairs.append((i, tail[k]))
            build(tail[:k] + tail[k + 1 :], fixed_left)
            pairs.pop()

    build(tuple(range(1, n + 1)), a)
    assert len(out) == count_involutions(n, a)
    return tuple(out)


def involution_mapping(w: Involution) -> tuple[int, ...]:
    """The permutation as a tuple: entry i-1 is the image of i."""
    image = list(range(1, w.n + 1))
    for i, j in w.pairs:
        image[i - 1], image[j - 1] = j, i
    return tuple(image)


def matrix_ones(w: Involution) -> frozenset[tuple[int, int]]:
    """Positions of the ones in the permutation matrix of w."""
    cells = {(i, i) for i in w.fixed}
    for i, j in w.pairs:
        cells.add((i, j))
        cells.add((j, i))
    return frozenset(cells)


def conjugate_involution(perm: tuple[int, ...], w: Involution) -> Involution:
    """The involution perm o w o perm^-1; perm maps i to perm[i-1]."""
    pairs = tuple(sorted(tuple(sorted((perm[i - 1], perm[j - 1]))) for i, j in w.pairs))
    fixed = tuple(sorted(perm[i - 1] for i in w.fixed))
    return Involution(w.n, pairs, fixed)
