"""Difference identities: closed-form sides vs raw-value differences."""

import pytest

from platonics import (
    PlatonicKind,
    THIRD_DIFFERENCE_CONSTANTS,
    combined_residual_tetrahedral,
    identity_residual,
    platonic_value,
)


def test_second_order_dodecahedral_at_one():
    check = identity_residual(PlatonicKind.DODECAHEDRAL, 2, 1)
    assert check.expected == 45 == 27 * 1 + 18
    assert check.actual == 84 - 2 * 20 + 1
    assert check.holds


def test_third_order_icosahedral_is_constant():
    for n in (1, 5, 40):
        check = identity_residual(PlatonicKind.ICOSAHEDRAL, 3, n)
        assert check.expected == 15
        assert check.actual == 15


def test_fourth_order_cube_at_one():
    check = identity_residual(PlatonicKind.CUBE, 4, 1)
    assert check.expected == 0
    assert check.actual == 125 - 256 + 162 - 32 + 1 == 0


def test_first_order_tetrahedral_at_three():
    check = identity_residual(PlatonicKind.TETRAHEDRAL, 1, 3)
    assert check.expected == 10
    assert check.actual == platonic_value(PlatonicKind.TETRAHEDRAL, 4) - 10


@pytest.mark.parametrize("kind", list(PlatonicKind))
@pytest.mark.parametrize("order", [1, 2, 3, 4])
def test_identities_hold_over_range(kind, order):
    for n in range(1, 121):
        assert identity_residual(kind, order, n).holds


def test_third_order_constants():
    assert THIRD_DIFFERENCE_CONSTANTS == {
        PlatonicKind.TETRAHEDRAL: 1,
        PlatonicKind.OCTAHEDRAL: 4,
        PlatonicKind.CUBE: 6,
        PlatonicKind.ICOSAHEDRAL: 15,
        PlatonicKind.DODECAHEDRAL: 27,
    }
    for kind, constant in THIRD_DIFFERENCE_CONSTANTS.items():
        assert identity_residual(kind, 3, 77).actual == constant


def test_combined_residual_examples():
    assert combined_residual_tetrahedral(1) == 1
    assert combined_residual_tetrahedral(7) == 7
    assert combined_residual_tetrahedral(100) == 100


def test_combined_residual_full_range():
    for n in range(1, 10_001):
        assert combined_residual_tetrahedral(n) == n


def test_validation():
    with pytest.raises(ValueError):
        identity_residual(PlatonicKind.CUBE, 0, 1)
    with pytest.raises(ValueError):
        identity_residual(PlatonicKind.CUBE, 5, 1)
    with pytest.raises(ValueError):
        identity_residual(PlatonicKind.CUBE, 2, 0)
    with pytest.raises(ValueError):
        combined_residual_tetrahedral(0)
