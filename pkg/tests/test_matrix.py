from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from algebra.matrix import Mat2Q
from errors import SingularMatrixError

small = st.integers(min_value=-5, max_value=5)
invertible = st.tuples(small, small, small, small).map(lambda e: Mat2Q.of(*e)).filter(lambda m: m.det != 0)


class TestMat2Q:
    def test_entries_are_fractions(self):
        m = Mat2Q.of(1, 2, 3, 4)
        assert all(isinstance(e, Fraction) for e in m.entries)
        assert m.det == -2
        assert m.trace == 5

    def test_inverse(self):
        m = Mat2Q.of(2, 1, 1, 1)
        assert m @ m.inverse() == Mat2Q.identity()
        with pytest.raises(SingularMatrixError):
            Mat2Q.of(1, 2, 2, 4).inverse()

    @pytest.mark.parametrize(
        "entries, order",
        [
            ((1, 0, 0, 1), 1),
            ((-1, 0, 0, -1), 2),
            ((0, 1, -1, -1), 3),
            ((0, 1, -1, 0), 4),
            ((0, -1, 1, 1), 6),
            ((1, 1, 0, 1), None),
        ],
    )
    def test_order(self, entries, order):
        assert Mat2Q.of(*entries).order() == order

    def test_conjugate_by_scaling(self):
        s = Mat2Q.diag(2, 1)
        m = Mat2Q.of(0, 1, -1, 0)
        assert m.conjugate(s) == Mat2Q.of(0, Fraction(1, 2), -2, 0)

    def test_negative_power(self):
        m = Mat2Q.of(1, 1, 0, 1)
        assert m ** -2 == Mat2Q.of(1, -2, 0, 1)

    def test_str_and_json(self):
        m = Mat2Q.of(Fraction(1, 2), Fraction(1, 2), Fraction(-3, 2), Fraction(1, 2))
        assert str(m) == "(1/2 1/2; -3/2 1/2)"
        assert Mat2Q.from_json(m.to_json()) == m
        assert Mat2Q.from_json([[1, 2], [3, 4]]) == Mat2Q.of(1, 2, 3, 4)
        assert Mat2Q.from_json({"s": 1, "u": 0, "t": 0, "v": "-1"}) == Mat2Q.diag(1, -1)
        with pytest.raises(ValueError):
            Mat2Q.from_json([1, 2, 3])

    @given(invertible, invertible)
    def test_det_is_multiplicative(self, a, b):
        assert (a @ b).det == a.det * b.det

    @given(invertible, invertible, invertible)
    def test_conjugation_is_a_homomorphism(self, a, b, by):
        assert (a @ b).conjugate(by) == a.conjugate(by) @ b.conjugate(by)
