from __future__ import annotations

import pytest

from spinalg.twists import (
    TierIndex,
    TwistData,
    balanced_partner,
    index_from_twist,
    marking_twist,
    tier_twists,
)


def test_index_from_twist_zero():
    d = index_from_twist(0, 6)
    assert (d.l, d.a, d.b) == (1, 0, 0)


def test_index_from_twist_cases():
    d = index_from_twist(2, 6)
    assert (d.k, d.l, d.a, d.b) == (2, 3, 1, 2)
    d = index_from_twist(3, 6)
    assert (d.l, d.a, d.b) == (2, 1, 1)
    d = index_from_twist(5, 6)
    assert (d.l, d.a, d.b) == (6, 5, 1)
    with pytest.raises(ValueError):
        index_from_twist(6, 6)
    with pytest.raises(ValueError):
        index_from_twist(-1, 6)


def test_twist_data_roundtrip():
    # a/l in lowest terms and k = a * (r/l) recover each other
    for r in (2, 3, 4, 6, 12):
        for k in range(r):
            d = index_from_twist(k, r)
            assert d.a * (r // d.l) == k
            assert (d.a + d.b) % d.l == 0


def test_twist_display():
    assert str(index_from_twist(2, 6)) == "2(3,1,2)"
    assert str(index_from_twist(0, 6)) == "0(1,0,0)"


def test_balanced_partner():
    assert balanced_partner(0, 5) == 0
    assert balanced_partner(2, 5) == 3
    for r in (2, 3, 4, 6):
        for k in range(r):
            assert (k + balanced_partner(k, r)) % r == 0


def test_marking_twist_inverts_character():
    # power q at a marking of index l with character b twists by -q*b
    # scaled up to the r-grid
    assert marking_twist(1, 2, 1, 6) == 3
    assert marking_twist(0, 3, 1, 6) == 0
    assert marking_twist(2, 3, 2, 6) == 4


def test_tier_index():
    t = TierIndex(4, 1, 3)
    assert (t.d, t.i, t.j) == (4, 1, 3)


def test_tier_twists():
    assert tier_twists(1, 3, 4, 4, 4) == TierIndex(4, 1, 3)
    assert tier_twists(1, 3, 4, 4, 2) == TierIndex(2, 2, 2)
    assert tier_twists(1, 3, 4, 4, 1) == TierIndex(1, 0, 0)
    assert tier_twists(1, 1, 2, 12, 12) == TierIndex(12, 1, 1)
    assert tier_twists(1, 1, 2, 12, 6) == TierIndex(6, 0, 0)
    with pytest.raises(ValueError):
        tier_twists(1, 3, 4, 4, 3)  # 3 does not divide 4
