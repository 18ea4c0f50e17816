import cmath

import pytest
from hypothesis import given
from hypothesis import strategies as st

from errors import InexactDivisionError
from families.eisenstein import ONE, EisensteinValue

ZETA = cmath.exp(1j * cmath.pi / 3)
values = st.builds(EisensteinValue, st.integers(-50, 50), st.integers(-50, 50))


def as_complex(v: EisensteinValue) -> complex:
    return v.a + v.b * ZETA


class TestEisenstein:
    def test_powers_of_zeta(self):
        for k in range(12):
            assert as_complex(EisensteinValue.zeta_power(k)) == pytest.approx(ZETA**k)
        assert EisensteinValue.zeta_power(6) == ONE

    @given(values, values)
    def test_multiplication_matches_complex(self, x, y):
        assert as_complex(x * y) == pytest.approx(as_complex(x) * as_complex(y), abs=1e-6)

    @given(values)
    def test_norm(self, x):
        assert x.norm == pytest.approx(abs(as_complex(x)) ** 2, abs=1e-6)
        assert (x * x.conjugate()).as_tuple() == (x.norm, 0)

    @given(values, values)
    def test_exact_division_inverts_multiplication(self, x, y):
        if y.norm == 0:
            return
        assert (x * y).exact_div(y) == x

    def test_inexact_division(self):
        with pytest.raises(InexactDivisionError):
            ONE.exact_div(EisensteinValue(2, 0))
        with pytest.raises(ZeroDivisionError):
            ONE.exact_div(EisensteinValue(0, 0))
