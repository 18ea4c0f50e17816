from fractions import Fraction

import pytest

from algebra.matrix import Mat2Q
from autgroup.groups import GroupClass, group_closure, representative
from errors import UnsupportedWeightError
from invariants.lattice import lattice_determinant, w_f


def test_integral_groups_have_determinant_one():
    for label in GroupClass:
        assert lattice_determinant(representative(label)) == 1


def test_order_six_with_halves():
    group = group_closure([Mat2Q.of(Fraction(1, 2), Fraction(1, 2), Fraction(-3, 2), Fraction(1, 2))])
    assert group.order == 6
    # v1 = v2 mod 2
    assert lattice_determinant(group) == 2


def test_scaled_swap():
    group = group_closure([Mat2Q.of(0, Fraction(1, 2), 2, 0)])
    assert group.order == 2
    assert lattice_determinant(group) == 2


def test_weight():
    assert w_f(representative(GroupClass.D4)) == Fraction(1, 8)
    assert w_f(representative(GroupClass.C1)) == 1
    with pytest.raises(UnsupportedWeightError):
        w_f(group_closure([Mat2Q.of(0, Fraction(1, 2), 2, 0)]))
