from math import gcd

import pytest
import sympy
from mpmath import mp

from algebra.poly import Poly
from errors import DegreeError
from families.trig_minpoly import (
    c_of_n,
    constant_coeff_formula,
    cos_fields_coincide,
    cyclotomic,
    eval_cyclotomic_at_zeta6,
    field_discriminant,
    is_reciprocal,
    lehmer_identity_holds,
    phi,
    pi_degree,
    pi_form,
    pi_roots,
    psi,
    psi_form,
    psi_from_roots,
    psi_galois,
    psi_one_bound_holds,
    psi_one_record,
    psi_roots,
    trace_stats,
    trace_stats_even,
)

X = sympy.Symbol("x")


def desc(*coeffs):
    return Poly.from_descending(coeffs)


class TestCyclotomic:
    @pytest.mark.parametrize("n", list(range(1, 121)) + [210, 231, 315, 360])
    def test_matches_sympy(self, n):
        expected = sympy.Poly(sympy.cyclotomic_poly(n, X), X).all_coeffs()[::-1]
        assert cyclotomic(n).coeffs == tuple(int(c) for c in expected)

    def test_degree_is_totient(self):
        assert all(cyclotomic(n).degree == phi(n) for n in range(1, 200))

    def test_index_must_be_positive(self):
        with pytest.raises(DegreeError):
            cyclotomic(0)


class TestPsi:
    @pytest.mark.parametrize(
        "n, expected",
        [
            (1, desc(1, -2)),
            (2, desc(1, 2)),
            (3, desc(1, 1)),
            (4, desc(1, 0)),
            (5, desc(1, 1, -1)),
            (7, desc(1, 1, -2, -1)),
            (9, desc(1, 0, -3, 1)),
            (16, desc(1, 0, -4, 0, 2)),
            (24, desc(1, 0, -4, 0, 1)),
        ],
    )
    def test_known_values(self, n, expected):
        assert psi(n) == expected

    def test_degree(self):
        for n in range(3, 301):
            assert psi(n).degree == phi(n) // 2

    @pytest.mark.parametrize("n", range(3, 61))
    def test_product_over_conjugates(self, n):
        assert psi_from_roots(n) == psi(n)

    @pytest.mark.parametrize("n", range(3, 61))
    def test_lehmer_identity(self, n):
        assert lehmer_identity_holds(n)

    def test_psi_form(self):
        f = psi_form(7)
        assert f.coeffs == (1, 1, -2, -1)


class TestPi:
    @pytest.mark.parametrize("n, c", [(3, 12), (5, 20), (8, 8), (12, 6), (16, 16), (24, 24), (28, 14), (36, 9), (60, 30)])
    def test_c_of_n(self, n, c):
        assert c_of_n(n) == c

    def test_c_of_4_undefined(self):
        with pytest.raises(DegreeError):
            c_of_n(4)
        with pytest.raises(DegreeError):
            pi_form(4)

    def test_pi_form(self):
        assert pi_form(16) == psi_form(16)
        assert pi_form(12) == psi_form(6)

    def test_pi_degree_matches(self):
        for n in range(3, 301):
            if n == 4:
                continue
            assert pi_degree(n) == psi(c_of_n(n)).degree

    def test_pi_roots_are_sines(self):
        roots = pi_roots(7)
        values = sorted(float(r.affine().real) for r in roots)
        assert any(v == pytest.approx(2 * float(mp.sin(2 * mp.pi / 7))) for v in values)


class TestRoots:
    @pytest.mark.parametrize("n", [1, 2, 3, 7, 24, 60])
    def test_roots_annihilate(self, n):
        p = psi(n)
        for r in psi_roots(n):
            assert abs(complex(p(r.affine()))) < 1e-12

    @pytest.mark.parametrize("n", [7, 15, 24, 35, 113])
    def test_galois_permutations(self, n):
        roots = psi_roots(n)
        ks = [k for k in range(1, n) if 2 * k < n and gcd(k, n) == 1]
        perms = psi_galois(n)
        assert len(perms) == len(roots)
        for t, perm in enumerate(perms):
            assert perm[0] == t
            assert sorted(perm) == list(range(len(roots)))
            a = ks[t]
            for i, k in enumerate(ks):
                image = 2 * mp.cos(2 * mp.pi * a * k / n)
                assert abs(complex(roots[perm[i]].affine()) - complex(image)) < 1e-12


class TestCoefficientFormulas:
    def test_constant_coefficient(self):
        for m in range(3, 301):
            assert constant_coeff_formula(m) == abs(psi(m).coeff(0)), m

    def test_small_indices(self):
        assert constant_coeff_formula(4) == 0
        assert constant_coeff_formula(8) == 2
        assert constant_coeff_formula(12) == 3
        assert constant_coeff_formula(20) == 5

    @pytest.mark.parametrize("k, disc", [(7, 49), (9, 81), (5, 5), (8, 8), (16, 2048), (15, 1125)])
    def test_field_discriminant(self, k, disc):
        assert field_discriminant(k) == disc

    @pytest.mark.parametrize("k", [5, 7, 8, 9, 11, 13, 15, 16, 20, 21])
    def test_field_discriminant_divides_polynomial_discriminant(self, k):
        poly_disc = sympy.discriminant(sympy.Poly(list(reversed(psi(k).coeffs)), X).as_expr(), X)
        assert poly_disc % field_discriminant(k) == 0

    def test_coinciding_fields(self):
        assert cos_fields_coincide(7, 14)
        assert cos_fields_coincide(15, 30)
        assert not cos_fields_coincide(7, 9)
        assert not cos_fields_coincide(8, 16)
        for k in range(5, 61):
            for l in range(5, 61):
                if k in (6,) or l in (6,):
                    continue
                if cos_fields_coincide(k, l):
                    assert psi(k).degree == psi(l).degree
                    assert field_discriminant(k) == field_discriminant(l)


class TestReciprocity:
    def test_only_3_and_24(self):
        hits = [n for n in range(3, 301) if psi(n).coeff(0) != 0 and is_reciprocal(psi(n))]
        assert hits == [3, 24]

    def test_zero_constant_rejected(self):
        with pytest.raises(ValueError):
            is_reciprocal(psi(4))

    def test_trace_stats(self):
        assert trace_stats(7) == (-1, 1, -2)
        assert trace_stats(3) == (-1, -1, 1)

    def test_trace_stats_even(self):
        # Psi_24 = g(x^2) with g = x^2 - 4x + 1
        assert trace_stats_even(24) == (4, 1, 4)
        with pytest.raises(DegreeError):
            trace_stats_even(10)


class TestPsiAtOne:
    @pytest.mark.parametrize("n", range(1, 301))
    def test_product_matches_reduction(self, n):
        assert eval_cyclotomic_at_zeta6(n, "product") == eval_cyclotomic_at_zeta6(n, "reduce")

    def test_norm_is_psi_one_squared(self):
        for n in range(3, 200):
            assert eval_cyclotomic_at_zeta6(n).norm == psi(n)(1) ** 2

    def test_bound(self):
        assert all(psi_one_bound_holds(n) for n in range(16, 1001))

    def test_record(self):
        rec = psi_one_record(7)
        assert rec["norm"] == psi(7)(1) ** 2
        assert rec["bound"] == 2**6
