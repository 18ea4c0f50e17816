import pytest
from mpmath import mp

from algebra.binary_form import BinaryForm
from algebra.matrix import Mat2Q
from errors import DegreeError
from families.chebyshev import t_form, u_form
from families.trig_minpoly import pi_form, psi_form
from invariants.area import area_fundamental


class TestArea:
    def test_circle(self):
        assert float(area_fundamental(BinaryForm.of(1, 0, 1)).value) == pytest.approx(float(mp.pi), rel=1e-10)

    def test_definite_quartic(self, quartic_definite):
        # integral of (cos^4 + sin^4)^(-1/2) over [0, pi) is 2K(1/2)
        expected = 2 * mp.ellipk(0.5)
        assert float(area_fundamental(quartic_definite).value) == pytest.approx(float(expected), rel=1e-8)

    @pytest.mark.parametrize(
        "form, expected",
        [
            (psi_form(7), 8.31171),
            (psi_form(11), 6.12984),
            (pi_form(5), 5.78302),
            (t_form(3), 5.78286),
            (u_form(4), 3.50332),
        ],
    )
    def test_tabulated_values(self, form, expected):
        result = area_fundamental(form)
        assert not result.divergent
        assert float(result.value) == pytest.approx(expected, abs=2e-5)
        assert result.error <= 1e-8 * result.value

    def test_loose_tolerance(self, psi7_form):
        loose = area_fundamental(psi7_form, 1e-4)
        assert float(loose.value) == pytest.approx(8.31171, abs=1e-3)

    def test_invariant_under_unimodular_change(self, psi7_form):
        moved = psi7_form.substitute(Mat2Q.of(2, 1, 1, 1))
        assert float(area_fundamental(moved).value) == pytest.approx(float(area_fundamental(psi7_form).value), rel=1e-7)


class TestDivergence:
    def test_indefinite_quadratic(self):
        result = area_fundamental(psi_form(5))
        assert result.divergent
        assert result.to_json()["A"] is None

    def test_double_real_root(self):
        # (x - y)^2 (x^2 + y^2)
        result = area_fundamental(BinaryForm.of(1, -2, 2, -2, 1))
        assert result.divergent

    def test_degree_one(self):
        with pytest.raises(DegreeError):
            area_fundamental(BinaryForm.of(1, 1))


@pytest.mark.slow
def test_chebyshev_areas_decrease_towards_limit():
    prev = area_fundamental(t_form(12)).value
    for n in (16, 20):
        a = area_fundamental(t_form(n)).value
        assert mp.mpf(8) / 3 < a < prev
        prev = a


@pytest.mark.slow
@pytest.mark.parametrize(
    "build_form, small, large, limit",
    [
        (psi_form, 128, 512, mp.mpf(16) / 3),
        (t_form, 20, 100, mp.mpf(8) / 3),
    ],
)
def test_areas_approach_their_limits(build_form, small, large, limit):
    near = area_fundamental(build_form(large)).value
    far = area_fundamental(build_form(small)).value
    assert abs(near - limit) < abs(far - limit)
