"""Brute-force ground truth: ranks, characters, and basis verification."""

from fractions import Fraction
from math import comb, factorial

import pytest

from involution_harmonics.errors import (
    InvalidParametersError,
    ResourceLimitError,
    ShapeMismatchError,
)
from involution_harmonics.frobenius import graded_frobenius_width, hilbert_series
from involution_harmonics.involutions import count_involutions
from involution_harmonics.oracle import (
    conjugation_character,
    cycle_type_order,
    frobenius_of_character,
    graded_character,
    graded_hilbert,
    matchings_of_size,
    murnaghan_nakayama,
    oracle_graded_frobenius,
    oracle_size_cap,
    verify_monomial_basis,
)
from involution_harmonics.partitions import partitions_of, syt_count


def valid_params(max_n):
    for n in range(1, max_n + 1):
        for a in range(n % 2, n + 1, 2):
            yield n, a


def test_matchings_of_size():
    assert matchings_of_size(4, 0) == ((),)
    assert matchings_of_size(4, 2) == (((1, 2), (3, 4)), ((1, 3), (2, 4)), ((1, 4), (2, 3)))
    for n in range(9):
        for d in range(n // 2 + 1):
            got = matchings_of_size(n, d)
            want = comb(n, 2 * d) * factorial(2 * d) // (2**d * factorial(d))
            assert len(got) == want
            assert len(set(got)) == len(got)


def test_graded_hilbert_values():
    assert graded_hilbert(2, 0) == (1,)
    assert graded_hilbert(3, 1) == (1, 2)
    assert graded_hilbert(4, 0) == (1, 2)
    assert graded_hilbert(4, 2) == (1, 5)


def test_graded_hilbert_total_is_the_point_count():
    for n, a in valid_params(6):
        assert sum(graded_hilbert(n, a)) == count_involutions(n, a)


def test_size_cap():
    with pytest.raises(ResourceLimitError):
        graded_hilbert(8, 0)
    assert graded_hilbert(8, 8, size_cap=8) == (1,)  # identity-only locus


def test_size_cap_configuration(monkeypatch):
    monkeypatch.delenv("INVOLUTION_ORACLE_MAX_N", raising=False)
    assert oracle_size_cap() == 6
    monkeypatch.setenv("INVOLUTION_ORACLE_MAX_N", "9")
    assert oracle_size_cap() == 9
    assert oracle_size_cap(4) == 4  # explicit beats the environment


def test_graded_character_values():
    chars = graded_character(3, 1)
    assert chars[0] == {(3,): 1, (2, 1): 1, (1, 1, 1): 1}
    assert chars[1] == {(3,): -1, (2, 1): 0, (1, 1, 1): 2}


def test_character_degrees_sum_to_fixed_point_counts():
    for n, a in valid_params(5):
        chars = graded_character(n, a)
        totals = conjugation_character(n, a)
        assert totals[(1,) * n] == count_involutions(n, a)
        for cycle_type in partitions_of(n):
            assert sum(chi[cycle_type] for chi in chars) == totals[cycle_type]


def test_murnaghan_nakayama_values():
    assert murnaghan_nakayama((2, 1), (3,)) == -1
    assert murnaghan_nakayama((2, 1), (1, 1, 1)) == 2
    assert murnaghan_nakayama((2, 1), (2, 1)) == 0
    assert murnaghan_nakayama((), ()) == 1
    with pytest.raises(ShapeMismatchError):
        murnaghan_nakayama((2, 1), (2,))


def test_murnaghan_nakayama_dimensions():
    for n in range(1, 9):
        for lam in partitions_of(n):
            assert murnaghan_nakayama(lam, (1,) * n) == syt_count(lam)


def test_character_orthogonality():
    for n in range(1, 7):
        shapes = partitions_of(n)
        for lam in shapes:
            for mu in shapes:
                value = sum(
                    Fraction(
                        murnaghan_nakayama(lam, alpha) * murnaghan_nakayama(mu, alpha),
                        cycle_type_order(alpha),
                    )
                    for alpha in shapes
                )
                assert value == (1 if lam == mu else 0)


def test_cycle_type_order_values():
    assert cycle_type_order((1, 1, 1)) == 6
    assert cycle_type_order((3,)) == 3
    assert cycle_type_order((2, 1)) == 2
    for n in range(1, 8):
        assert sum(factorial(n) // cycle_type_order(c) for c in partitions_of(n)) == factorial(n)


def test_frobenius_of_character_on_irreducibles():
    for lam in partitions_of(4):
        chi = {alpha: murnaghan_nakayama(lam, alpha) for alpha in partitions_of(4)}
        assert frobenius_of_character([chi]) == {lam: (1,)}


def test_frobenius_of_character_rejects():
    with pytest.raises(InvalidParametersError):
        frobenius_of_character([])
    with pytest.raises(InvalidParametersError):
        frobenius_of_character([{(2,): 1, (1, 1): 0}])  # half-integral multiplicity
    with pytest.raises(InvalidParametersError):
        frobenius_of_character([{(2,): 1, (1, 1): -1}])  # negative multiplicity


def test_oracle_agrees_with_the_closed_forms():
    for n, a in valid_params(5):
        expansion = graded_frobenius_width(n, a)
        assert oracle_graded_frobenius(n, a) == expansion
        assert graded_hilbert(n, a) == hilbert_series(expansion)


def test_verify_monomial_basis_passes():
    for n, a in [(4, 0), (3, 1), (5, 3)]:
        report = verify_monomial_basis(n, a)
        assert report["basis_check"] == "PASS"
        assert "failures" not in report
        assert sum(report["profile"]) == count_involutions(n, a)
        assert report["profile"] == report["hilbert"]
    assert verify_monomial_basis(4, 0)["hilbert"] == [1, 2]
    assert verify_monomial_basis(3, 1)["profile"] == [1, 2]


def test_verify_monomial_basis_report_shape():
    report = verify_monomial_basis(4, 2)
    assert report["n"] == 4 and report["a"] == 2
    assert report["hilbert"] == [1, 5]
    assert {frozenset(term) for term in map(dict.keys, report["frobenius"])} == {
        frozenset(["partition", "coeffs"])
    }
