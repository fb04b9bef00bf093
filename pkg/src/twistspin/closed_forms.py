"""Closed-form representation counts and the twist-parameter distinguisher.

Counts are for homomorphisms of the twist-spin knot group with the regular
orbit generator h sent to the designated order-2 central element (-I in the
matrix group, r^k in the dihedral group).

Two dihedral formulas are provided because they genuinely differ:

* ``dihedral_count`` is the published closed form, d/2 and (d+1)/2 with
  d = gcd(|m|, k).  Exhaustive enumeration shows these values count the
  orbits {tau, s tau s^-1} under conjugation by a reflection (r^p paired
  with r^-p), and that the even case silently assumes |m|/d odd.

* ``dihedral_hom_count`` is the closed form for raw homomorphism counts,
  verified against exhaustive enumeration across every sweep in the test
  suite: d for odd m; d for even m when d is even and |m|/d is odd; else 0.

The verifier reports the exact relationship between the two; ``distinguish``
follows the published formula, and its certificates are unaffected by the
choice (both formulas depend on m only through |m|, gcd structure included).
"""

from __future__ import annotations

import math
from dataclasses import dataclass


def sl2z3_count(m: int) -> int | None:
    """Count with h -> -I in the order-24 matrix group; None where no closed
    form is asserted (odd multiples of 3: the count is knot-dependent there,
    so callers fall back to enumeration)."""
    if m % 2 == 1:
        return 1 if m % 3 != 0 else None
    if m % 4 == 0:
        return 0  # includes m = 0, where h dies and can never reach -I
    return 6  # m = 2 mod 4: one constant representation per solution of A^2 = -I


def _gcd_with_zero(m: int, k: int) -> int:
    return 0 if m == 0 else math.gcd(abs(m), k)


def dihedral_count(m: int, k: int) -> int:
    """Published closed form for h -> r^k in the 4k-element dihedral group.

    d = gcd(|m|, k) with gcd(0, k) = 0; even m with odd d gives 0, even m
    with even d gives d/2 (d = 0 included), odd m gives (d+1)/2.  The m = 0
    and m = +-1 special values 0 and 1 come out of the same case split.
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    d = _gcd_with_zero(m, k)
    if m % 2 == 1:
        return (d + 1) // 2
    return d // 2 if d % 2 == 0 else 0


def dihedral_hom_count(m: int, k: int) -> int:
    """Exhaustive homomorphism count with h -> r^k, in closed form.

    Images are forced to a common rotation r^p; counting the admissible p in
    [0, 2k) gives d for odd m, and for even m gives d when d is even and
    |m|/d is odd (i.e. the 2-adic valuation of m is at most that of k), else
    0.  Knot-independent; matches enumeration on every catalog sweep.
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    if m == 0:
        return 0
    d = math.gcd(abs(m), k)
    if m % 2 == 1:
        return d
    if d % 2 == 0 and (abs(m) // d) % 2 == 1:
        return d
    return 0


@dataclass(frozen=True)
class DistinguishWitness:
    """A dihedral parameter k whose counts separate two twist parameters."""

    k: int
    count1: int
    count2: int


def distinguish(m1: int, m2: int, k_max: int | None = None) -> DistinguishWitness | None:
    """Least k <= k_max with dihedral_count(m1, k) != dihedral_count(m2, k).

    Returns None when no such k exists; since every count depends on m only
    through |m|, parameters with |m1| = |m2| are never separated (in
    particular m and -m), while pairs with |m1| != |m2| always are, with a
    witness no larger than max(|m1|, |m2|, 2).
    """
    if k_max is None:
        k_max = max(abs(m1), abs(m2), 2)
    if k_max < 1:
        raise ValueError("k_max must be a positive integer")
    for k in range(1, k_max + 1):
        c1, c2 = dihedral_count(m1, k), dihedral_count(m2, k)
        if c1 != c2:
            return DistinguishWitness(k=k, count1=c1, count2=c2)
    return None
