"""Closed-form automorphisms of cubic and quartic forms.

For an irreducible cubic with square discriminant the generator of Aut F
comes straight from the Hessian. For a quartic, the order-4 automorphism is
read off a "rationally significant" quadratic factor f of a sextic covariant.
"""
from __future__ import annotations

import logging
from fractions import Fraction
from math import isqrt
from typing import Optional

from algebra.binary_form import BinaryForm, form_product
from algebra.matrix import Mat2Q
from autgroup.groups import MatrixGroup, group_closure
from errors import DegreeError, InconsistencyError

logger = logging.getLogger(__name__)


def _square_root(n: Fraction) -> Optional[Fraction]:
    n = Fraction(n)
    if n < 0:
        return None
    p, q = isqrt(n.numerator), isqrt(n.denominator)
    if p * p != n.numerator or q * q != n.denominator:
        return None
    return Fraction(p, q)


def cubic_hessian(form: BinaryForm) -> BinaryForm:
    """q = a x^2 + b xy + c y^2 for F = b3 x^3 + b2 x^2 y + b1 x y^2 + b0 y^3."""
    if form.degree != 3:
        raise DegreeError("the Hessian route is for cubic forms")
    b3, b2, b1, b0 = form.coeffs
    return BinaryForm.of(b2 * b2 - 3 * b3 * b1, b2 * b1 - 9 * b3 * b0, b1 * b1 - 3 * b2 * b0)


def xiao_cubic_aut(form: BinaryForm) -> Optional[MatrixGroup]:
    """<N_q> for an irreducible cubic whose discriminant is a square; None otherwise."""
    if form.degree != 3:
        raise DegreeError("xiao_cubic_aut needs a cubic form")
    if _square_root(form.discriminant()) is None:
        return None
    a, b, c = (Fraction(x) for x in cubic_hessian(form).coeffs)
    dq = b * b - 4 * a * c
    if dq == 0:
        raise InconsistencyError("the Hessian of an irreducible cubic cannot be degenerate")
    r = _square_root(-3 * dq)
    if r is None:
        raise InconsistencyError(f"-3*D_q = {-3 * dq} is not a rational square")
    n_q = Mat2Q.of(b * r - dq, 2 * c * r, -2 * a * r, -b * r - dq) / (2 * dq)
    group = group_closure([n_q])
    if group.order != 3:
        raise InconsistencyError(f"N_q = {n_q} has order {group.order}, expected 3")
    logger.debug("xiao_cubic_aut: D_q = %s, N_q = %s", dq, n_q)
    return group


def u_f_matrix(f: BinaryForm) -> Mat2Q:
    """U_f = (b 2c; -2a -b) / sqrt|D_f| for a quadratic f with D_f < 0 a negated square."""
    if f.degree != 2:
        raise DegreeError("U_f is built from a quadratic form")
    a, b, c = (Fraction(x) for x in f.coeffs)
    disc = b * b - 4 * a * c
    if disc >= 0:
        # U_f^2 = (D/|D|) I, so only D < 0 gives an order-4 matrix
        raise DegreeError(f"U_f needs a negative discriminant, got {disc}")
    r = _square_root(-disc)
    if r is None:
        raise InconsistencyError(f"|D_f| = {-disc} is not a rational square")
    u = Mat2Q.of(b, 2 * c, -2 * a, -b) / r
    if u @ u != -Mat2Q.identity():
        raise InconsistencyError(f"U_f = {u} does not square to -I")
    return u


# sextic covariant of Psi_15 as printed; its quartic factor belongs to Psi_30 = Psi_15(-x, y)
PSI15_F6 = form_product(
    [BinaryForm(0, (15,)), BinaryForm.of(1, -2, 2), BinaryForm.of(1, 6, 6, -4, -4)]
)

# Jacobian of Psi_15 and its Hessian, up to a rational factor
PSI15_SEXTIC_COVARIANT = form_product([BinaryForm.of(1, -2, 2), BinaryForm.of(1, -6, 6, 4, -4)])

PSI15_SIGNIFICANT_FACTOR = BinaryForm.of(1, -2, 2)
