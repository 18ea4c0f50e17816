import pytest

from algebra.binary_form import BinaryForm, form_product
from algebra.matrix import Mat2Q
from autgroup.closed_forms import (
    PSI15_F6,
    PSI15_SEXTIC_COVARIANT,
    PSI15_SIGNIFICANT_FACTOR,
    cubic_hessian,
    u_f_matrix,
    xiao_cubic_aut,
)
from autgroup.oracles import expected_aut
from autgroup.search import is_automorphism
from errors import DegreeError, InconsistencyError
from families.trig_minpoly import psi_form


class TestCubic:
    @pytest.mark.parametrize("n", [7, 9, 14, 18])
    def test_matches_table(self, n):
        group = xiao_cubic_aut(psi_form(n))
        assert group is not None
        assert group.elements == expected_aut("psi", n).aut.elements

    def test_non_square_discriminant(self):
        assert xiao_cubic_aut(BinaryForm.of(1, 0, 0, -2)) is None

    def test_hessian(self, psi7_form):
        # b2^2 - 3 b3 b1, b2 b1 - 9 b3 b0, b1^2 - 3 b2 b0
        assert cubic_hessian(psi7_form) == BinaryForm.of(7, 7, 7)

    def test_needs_cubic(self, psi24_form):
        with pytest.raises(DegreeError):
            xiao_cubic_aut(psi24_form)


class TestQuadraticFactor:
    def test_sum_of_squares(self):
        assert u_f_matrix(BinaryForm.of(1, 0, 1)) == Mat2Q.of(0, 1, -1, 0)

    def test_positive_discriminant(self):
        with pytest.raises(DegreeError):
            u_f_matrix(BinaryForm.of(0, 1, 0))

    def test_discriminant_not_a_square(self):
        with pytest.raises(InconsistencyError):
            u_f_matrix(BinaryForm.of(1, 1, 1))

    def test_psi15_generator(self):
        u = u_f_matrix(PSI15_SIGNIFICANT_FACTOR)
        assert u == Mat2Q.of(-1, 2, -1, 1)
        assert is_automorphism(psi_form(15), u)
        assert u.order() == 4

    def test_covariant_is_invariant(self):
        for m in expected_aut("psi", 15).aut:
            assert PSI15_SEXTIC_COVARIANT.substitute(m) == PSI15_SEXTIC_COVARIANT

    def test_printed_sextic_factors(self):
        quadratic = BinaryForm.of(1, -2, 2)
        quartic = BinaryForm.of(1, 6, 6, -4, -4)
        assert PSI15_F6 == form_product([BinaryForm(0, (15,)), quadratic, quartic])
        for m in expected_aut("psi", 15).aut:
            assert quadratic.substitute(m) == quadratic
        # the quartic factor belongs to Psi_30 = Psi_15(-x, y)
        for m in expected_aut("psi", 30).aut:
            assert quartic.substitute(m) == quartic
        assert any(quartic.substitute(m) != quartic for m in expected_aut("psi", 15).aut)
