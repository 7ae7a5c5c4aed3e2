"""Tests for representability counts, the threshold-count family, and gap sums."""

from bisect import bisect_right
from fractions import Fraction
from math import gcd

import pytest

from coinfloor.coinproblem import (
    BestFamilyPoint,
    NonRepSet,
    best2_count,
    best_family_point,
    count_lattice_3var,
    count_representable_upto,
    frobenius_number,
    is_representable,
    nonrepresentable_set,
    rep_count_shift_check,
    representation_count,
    sylvester_sum,
    sylvester_sum_power,
    weighted_sylvester_sum,
)
from coinfloor.core import CoprimePair
from oracle import brute_lattice3, brute_rep_count, brute_representables


def test_frobenius_number_examples():
    assert frobenius_number(CoprimePair(29, 23)) == 615
    assert frobenius_number(CoprimePair(1, 1)) == -1
    assert frobenius_number(CoprimePair(2, 3)) == 1


def test_is_representable_examples():
    p = CoprimePair(29, 23)
    assert not is_representable(p, 49)
    assert is_representable(p, 0)
    assert is_representable(p, 616)
    # only 0, 23, 29, 46 are representable up to 49
    assert [n for n in range(50) if is_representable(p, n)] == [0, 23, 29, 46]
    with pytest.raises(ValueError):
        is_representable(p, -1)


def test_membership_and_count_match_brute_force():
    for a in range(1, 26):
        for b in range(1, 26):
            if gcd(a, b) != 1:
                continue
            p = CoprimePair(a, b)
            reachable = brute_representables(a, b, 2 * a * b + 2)
            for n in range(2 * a * b + 3):
                assert is_representable(p, n) == (n in reachable), (a, b, n)
                assert representation_count(p, n).count == brute_rep_count(a, b, n)


def test_representation_count_examples():
    p = CoprimePair(29, 23)
    assert representation_count(p, 667).count == 2
    assert representation_count(p, 1).count == 0
    assert representation_count(CoprimePair(2, 3), 6).count == 2
    rc = representation_count(p, 667)
    assert rc.n == 667


def test_rep_count_shift_examples_and_sweep():
    assert rep_count_shift_check(CoprimePair(29, 23), 0)
    assert rep_count_shift_check(CoprimePair(2, 3), 1)
    assert rep_count_shift_check(CoprimePair(5, 7), 23)
    for a in range(1, 41):
        for b in range(1, 41):
            if gcd(a, b) != 1:
                continue
            p = CoprimePair(a, b)
            for n in range(2 * a * b + 1):
                assert rep_count_shift_check(p, n)


def test_count_representable_upto_examples():
    p = CoprimePair(29, 23)
    assert count_representable_upto(p, 257) == 60
    assert count_representable_upto(p, -1) == 0
    assert count_representable_upto(p, 615) == 308
    assert count_representable_upto(p, 0) == 1  # zero is representable
    assert count_representable_upto(CoprimePair(1, 7), 41) == 42


def test_count_representable_upto_vs_enumeration():
    for a in range(2, 13):
        for b in range(2, 13):
            if gcd(a, b) != 1:
                continue
            p = CoprimePair(a, b)
            reachable = brute_representables(a, b, a * b)
            running = 0
            for k in range(a * b + 1):
                if k in reachable:
                    running += 1
                assert count_representable_upto(p, k) == running


def test_count_lattice_3var_examples():
    assert count_lattice_3var(CoprimePair(29, 23), 0) == 1
    assert count_lattice_3var(CoprimePair(2, 3), 6) == 7
    # frozen from the double-loop oracle; equals the threshold count at 257
    # because below a*b each value has at most one representation
    assert count_lattice_3var(CoprimePair(29, 23), 257) == 60
    with pytest.raises(ValueError):
        count_lattice_3var(CoprimePair(2, 3), -1)


def test_count_lattice_3var_vs_brute_force():
    for a in range(1, 16):
        for b in range(1, 16):
            if gcd(a, b) != 1:
                continue
            p = CoprimePair(a, b)
            for target in range(0, 3 * a * b, 7):
                assert count_lattice_3var(p, target) == brute_lattice3(a, b, target)


def test_uniqueness_bridge_below_ab():
    # below a*b: the 3-variable count equals both the prefix sum of the
    # solution counts and the membership count
    for a in range(2, 26):
        for b in range(2, 26):
            if gcd(a, b) != 1:
                continue
            p = CoprimePair(a, b)
            prefix = 0
            members = 0
            for k in range(a * b):
                cnt = representation_count(p, k).count
                assert cnt <= 1
                prefix += cnt
                members += 1 if cnt else 0
                assert count_lattice_3var(p, k) == prefix
                assert count_representable_upto(p, k) == members


def test_best_family_point_examples():
    p = CoprimePair(29, 23)
    assert best_family_point(p, 27) == BestFamilyPoint(alpha=27, beta=21, k=615, n0=308)
    low = best_family_point(p, 1)
    assert (low.beta, low.n0) == (-1, 0)
    assert low.k < 0  # reference table lists -1; the closed form gives -3
    mid = best_family_point(p, 11)
    assert (mid.k, mid.n0) == (228, 48)
    assert mid.beta == 7


def test_best_family_point_validation():
    p = CoprimePair(29, 23)
    with pytest.raises(ValueError):
        best_family_point(p, 2)  # parity of a violated
    with pytest.raises(ValueError):
        best_family_point(p, 0)
    with pytest.raises(ValueError):
        best_family_point(p, 29)
    with pytest.raises(ValueError):
        best_family_point(CoprimePair(23, 29), 3)  # needs b < a


def test_best_family_matches_membership_count_to_80():
    for a in range(2, 81):
        for b in range(1, a):
            if gcd(a, b) != 1:
                continue
            p = CoprimePair(a, b)
            gaps = nonrepresentable_set(p).gaps
            for alpha in range(2 - a % 2, a, 2):
                pt = best_family_point(p, alpha)
                assert pt.beta >= -1
                assert 2 * pt.k == b * pt.alpha + a * pt.beta
                assert 2 * pt.n0 == (pt.alpha + 1) * (pt.beta + 1)
                # membership count from the enumerated gap set
                want = 0 if pt.k < 0 else pt.k + 1 - bisect_right(gaps, pt.k)
                assert pt.n0 == want, (a, b, alpha)


def test_best2_count_examples():
    p = CoprimePair(29, 23)
    assert best2_count(p, 28) == (615, 308)
    assert best2_count(p, 20) == (228, 48)
    k15, n15 = best2_count(p, 15)
    pt1 = best_family_point(p, 1)  # alpha = 2*15 - 29 = 1
    assert (k15, n15) == (pt1.k, pt1.n0)
    for bad_d in (14, 29, 30):
        with pytest.raises(ValueError):
            best2_count(p, bad_d)
    with pytest.raises(ValueError):
        best2_count(CoprimePair(23, 29), 20)


def test_best2_count_matches_counting_to_40():
    for a in range(3, 41):
        for b in range(1, a):
            if gcd(a, b) != 1:
                continue
            p = CoprimePair(a, b)
            for d in range(a // 2 + 1, a):
                k, n0 = best2_count(p, d)
                assert n0 == count_representable_upto(p, k)


def test_nonrepresentable_set_examples():
    assert nonrepresentable_set(CoprimePair(2, 3)).gaps == (1,)
    assert nonrepresentable_set(CoprimePair(3, 5)).gaps == (1, 2, 4, 7)
    big = nonrepresentable_set(CoprimePair(29, 23))
    assert big.count == 308
    assert big.largest == 615
    assert isinstance(big, NonRepSet)


def test_nonrepresentable_set_degenerate_pairs():
    for pair in (CoprimePair(1, 1), CoprimePair(1, 9), CoprimePair(9, 1)):
        nr = nonrepresentable_set(pair)
        assert nr.gaps == ()
        assert nr.count == 0
        assert nr.largest is None
        assert sylvester_sum(pair) == 0
        assert sylvester_sum_power(pair, 2) == 0
        assert weighted_sylvester_sum(pair, Fraction(1, 2), 1) == 0


def test_nonrepresentable_set_vs_brute_force():
    for a in range(2, 21):
        for b in range(2, 21):
            if gcd(a, b) != 1:
                continue
            top = a * b - a - b
            reachable = brute_representables(a, b, top)
            expected = tuple(n for n in range(top + 1) if n not in reachable)
            assert nonrepresentable_set(CoprimePair(a, b)).gaps == expected


def test_gap_symmetry():
    # n is a gap iff (a*b - a - b) - n is not
    for a in range(2, 41):
        for b in range(2, 41):
            if gcd(a, b) != 1:
                continue
            top = a * b - a - b
            gaps = set(nonrepresentable_set(CoprimePair(a, b)).gaps)
            for n in range(top + 1):
                assert (n in gaps) == (top - n not in gaps)


def test_sylvester_sum_examples():
    assert sylvester_sum(CoprimePair(2, 3)) == 1
    assert sylvester_sum(CoprimePair(3, 5)) == 14
    p = CoprimePair(29, 23)
    assert sylvester_sum(p) == sum(nonrepresentable_set(p).gaps) == 65758


def test_sylvester_sum_power_examples():
    assert sylvester_sum_power(CoprimePair(3, 5), 2) == 70
    assert sylvester_sum_power(CoprimePair(2, 3), 0) == 1
    assert sylvester_sum_power(CoprimePair(29, 23), 2) == 28 * 22 * 667 * 615 // 12
    with pytest.raises(ValueError):
        sylvester_sum_power(CoprimePair(3, 5), -1)


def test_sylvester_closed_forms_vs_enumeration():
    for a in range(2, 61):
        for b in range(2, 61):
            if gcd(a, b) != 1:
                continue
            p = CoprimePair(a, b)
            nr = nonrepresentable_set(p)
            assert nr.count == (a - 1) * (b - 1) // 2
            assert sylvester_sum_power(p, 0) == nr.count
            first = (a - 1) * (b - 1) * (2 * a * b - a - b - 1)
            assert first % 12 == 0
            assert sylvester_sum(p) == first // 12 == sum(nr.gaps)
            second = (a - 1) * (b - 1) * a * b * (a * b - a - b)
            assert second % 12 == 0
            assert sylvester_sum_power(p, 2) == second // 12


def test_weighted_sylvester_sum_examples():
    assert weighted_sylvester_sum(CoprimePair(3, 5), 1, 1) == 14
    assert weighted_sylvester_sum(CoprimePair(2, 3), 2, 0) == 1
    value = weighted_sylvester_sum(CoprimePair(3, 5), Fraction(1, 2), 0)
    assert value == Fraction(105, 64)  # 1 + 1/2 + 1/8 + 1/64 over gaps 1, 2, 4, 7
    assert isinstance(value, Fraction)


def test_weighted_sylvester_sum_reductions_and_validation():
    with pytest.raises(ValueError):
        weighted_sylvester_sum(CoprimePair(3, 5), 0, 1)
    for a, b in ((3, 5), (4, 7), (5, 9)):
        p = CoprimePair(a, b)
        for m in range(4):
            assert weighted_sylvester_sum(p, 1, m) == sylvester_sum_power(p, m)
        # hand evaluation with an arbitrary rational weight
        lam = Fraction(-3, 7)
        want = sum(lam ** (n - 1) * n**2 for n in nonrepresentable_set(p).gaps)
        assert weighted_sylvester_sum(p, lam, 2) == want
