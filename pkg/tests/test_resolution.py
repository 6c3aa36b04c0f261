from __future__ import annotations

import pytest

from spinalg.field import FieldConfig
from spinalg.resolution import resolution_exact_check


def test_exactness_small_degrees():
    field = FieldConfig(5, 1)
    for d in range(0, 9):
        assert resolution_exact_check(field, d)


def test_exactness_other_primes():
    assert resolution_exact_check(FieldConfig(7, 1), 6)
    assert resolution_exact_check(FieldConfig(13, 1), 6)


def test_degree_bound_validation():
    with pytest.raises(ValueError):
        resolution_exact_check(FieldConfig(5, 1), -1)
