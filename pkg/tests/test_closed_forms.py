"""Closed-form counts and the distinguishing procedure."""

import math

import pytest

from twistspin.closed_forms import (
    DistinguishWitness,
    dihedral_count,
    dihedral_hom_count,
    distinguish,
    sl2z3_count,
)


def test_sl2z3_count_cases():
    assert sl2z3_count(5) == 1
    assert sl2z3_count(-7) == 1
    assert sl2z3_count(4) == 0
    assert sl2z3_count(0) == 0  # h dies, so it can never reach -I
    assert sl2z3_count(2) == 6
    assert sl2z3_count(-10) == 6
    assert sl2z3_count(3) is None
    assert sl2z3_count(-9) is None
    assert sl2z3_count(1) == 1
    assert sl2z3_count(-1) == 1


def test_sl2z3_count_known_values_are_expected_set():
    known = {sl2z3_count(m) for m in range(-24, 25)} - {None}
    assert known == {0, 1, 6}


def test_dihedral_count_published_cases():
    assert dihedral_count(2, 3) == 0  # d = 1 odd
    assert dihedral_count(2, 2) == 1  # d/2
    assert dihedral_count(3, 3) == 2  # (d+1)/2
    assert dihedral_count(1, 7) == 1
    for k in range(1, 13):
        assert dihedral_count(0, k) == 0


def test_dihedral_count_sign_symmetry_and_bound():
    for m in range(-12, 13):
        for k in range(1, 13):
            assert dihedral_count(m, k) == dihedral_count(-m, k)
            d = 0 if m == 0 else math.gcd(abs(m), k)
            assert dihedral_count(m, k) <= (d + 1) // 2


def test_dihedral_count_rejects_bad_k():
    with pytest.raises(ValueError):
        dihedral_count(2, 0)
    with pytest.raises(ValueError):
        dihedral_hom_count(2, -1)


def rotation_solution_count(m, k):
    """Independent arithmetic oracle: admissible common rotations r^p.

    The meridians share one rotation exponent p in [0, 2k); the power relator
    forces |m|p = 0 (odd m, since h^beta dies) or |m|p = k (even m, since
    h^beta = r^k) modulo 2k.
    """
    if m == 0:
        return 0  # h itself must die, but it is sent to r^k != 1
    target = 0 if m % 2 else k
    return sum(1 for p in range(2 * k) if (abs(m) * p - target) % (2 * k) == 0)


def test_dihedral_hom_count_matches_arithmetic_oracle():
    for m in range(-24, 25):
        for k in range(1, 17):
            assert dihedral_hom_count(m, k) == rotation_solution_count(m, k)


def test_published_formula_is_the_orbit_count_of_the_hom_count():
    """The published values count {p, -p} orbits of the admissible rotations:
    (raw + 1) / 2 for odd m (p = 0 is a fixed point), raw / 2 for even m with
    raw > 0, and a spurious nonzero value exactly where raw = 0 with even
    d = gcd(|m|, k) and |m|/d even."""
    for m in range(-16, 17):
        for k in range(1, 13):
            raw = dihedral_hom_count(m, k)
            published = dihedral_count(m, k)
            if m % 2 == 1:
                assert published == (raw + 1) // 2
            elif raw > 0:
                assert published == raw // 2
            elif published != 0:
                d = math.gcd(abs(m), k)
                assert m != 0 and d % 2 == 0 and (abs(m) // d) % 2 == 0


def test_distinguish_examples():
    assert distinguish(2, 3, 8) == DistinguishWitness(k=1, count1=0, count2=1)
    assert distinguish(5, 5, 12) is None
    assert distinguish(0, 1, 1) == DistinguishWitness(k=1, count1=0, count2=1)


def test_distinguish_returns_least_k():
    for m1, m2 in [(2, 4), (3, 9), (4, 8), (0, 2), (6, 10)]:
        w = distinguish(m1, m2, 16)
        assert w is not None
        for k in range(1, w.k):
            assert dihedral_count(m1, k) == dihedral_count(m2, k)
        assert dihedral_count(m1, w.k) != dihedral_count(m2, w.k)


def test_distinguish_witness_guarantee_for_distinct_magnitudes():
    for m1 in range(-8, 9):
        for m2 in range(-8, 9):
            if abs(m1) == abs(m2):
                continue
            bound = max(abs(m1), abs(m2), 2)
            w = distinguish(m1, m2, bound)
            assert w is not None, (m1, m2)
            assert w.k <= bound


def test_distinguish_cannot_separate_opposite_signs():
    # every count in scope depends on m only through |m|
    for m in range(1, 9):
        assert distinguish(m, -m, 64) is None


def test_distinguish_default_kmax():
    w = distinguish(2, 3)
    assert w == DistinguishWitness(k=1, count1=0, count2=1)
    with pytest.raises(ValueError):
        distinguish(2, 3, 0)
