"""Twist arithmetic at nodes and markings.

A node twist k in {0, .., r-1} determines the local index l = r/gcd(k, r)
and the balanced exponent pair (a, b) = (k/gcd(k, r), l - a), which in
turn name the node-ring module M(a, b) carried by the root bundle on
each branch.  Lower tiers (the d-th root pieces for d | r) rescale the
top exponents by r/d and reduce mod l.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd


@dataclass(frozen=True)
class TwistData:
    """Node twist k at level r with its derived local exponents."""

    k: int
    r: int
    l: int
    a: int
    b: int

    def __post_init__(self):
        if not (0 <= self.k < self.r):
            raise ValueError(f"twist must satisfy 0 <= k < r; got k={self.k}, r={self.r}")

    def __str__(self):
        return f"{self.k}({self.l},{self.a},{self.b})"


def index_from_twist(k: int, r: int) -> TwistData:
    """Local index and exponent pair attached to a node twist.

    k = 0 is the untwisted (free) case: l = 1 and a = b = 0.  Otherwise
    a and b are positive, coprime to l, and sum to l.
    """
    if r < 1:
        raise ValueError("level r must be a positive integer")
    if not (0 <= k < r):
        raise ValueError(f"twist must satisfy 0 <= k < r; got k={k}")
    if k == 0:
        return TwistData(0, r, 1, 0, 0)
    g = gcd(k, r)
    l = r // g
    a = k // g
    return TwistData(k, r, l, a, l - a)


def balanced_partner(k: int, r: int) -> int:
    """Twist on the opposite branch of a balanced node."""
    if not (0 <= k < r):
        raise ValueError(f"twist must satisfy 0 <= k < r; got k={k}")
    return (r - k) % r


def marking_twist(power: int, l: int, b: int, r: int) -> int:
    """Least nonnegative twist k with k = -power * b * (r/l)  (mod r).

    This is the twist forced at a marking where the chosen local sheaf
    exponent is `power` and the node data is (l, b) at level r.
    """
    if l < 1 or r % l != 0:
        raise ValueError(f"l must divide r; got l={l}, r={r}")
    return (-power * b * (r // l)) % r


@dataclass(frozen=True)
class TierIndex:
    """Exponent pair of the d-th tier of a root system with top pair (i, j)."""

    d: int
    i: int
    j: int


def tier_twists(i_top: int, j_top: int, l: int, r: int, d: int) -> TierIndex:
    """Exponents of the tier-d module: the top pair scaled by r/d mod l.

    Requires d | r and l | r.  The top tier is d = r; tier d is free
    exactly when l divides (r/d) * i_top, and then every tier e | d is
    free as well.
    """
    if l < 1 or r % l != 0:
        raise ValueError(f"l must divide r; got l={l}, r={r}")
    if d < 1 or r % d != 0:
        raise ValueError(f"tier must divide r; got d={d}, r={r}")
    if not ((i_top == 0 and j_top == 0) or (0 < i_top and 0 < j_top and i_top + j_top == l)):
        raise ValueError(f"top exponents must be (0, 0) or positive with sum l; got ({i_top}, {j_top})")
    scale = r // d
    return TierIndex(d, (i_top * scale) % l, (j_top * scale) % l)
