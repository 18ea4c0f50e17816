from __future__ import annotations

import logging
from fractions import Fraction
from math import lcm

from sympy import Matrix
from sympy.matrices.normalforms import hermite_normal_form

from autgroup.groups import MatrixGroup
from errors import UnsupportedWeightError

logger = logging.getLogger(__name__)


def lattice_determinant(group: MatrixGroup) -> int:
    """Index in Z^2 of {v : A v in Z^2 for every A in the group}.

    With D the common denominator and R the stacked integer matrices D*A,
    v lies in the lattice iff R v = 0 mod D. The index is the size of the
    image of Z^2 in (Z/D)^(2k), i.e. D^(2k) / det HNF([R | D*I]).
    """
    den = 1
    for m in group.elements:
        for e in m.entries:
            den = lcm(den, e.denominator)
    if den == 1:
        return 1

    rows = []
    for m in group.sorted():
        s, u, t, v = (int(e * den) for e in m.entries)
        rows.append([s, u])
        rows.append([t, v])
    k = len(rows)
    big = Matrix([row + [den if i == j else 0 for j in range(k)] for i, row in enumerate(rows)])
    h = hermite_normal_form(big)
    h = h[:, h.cols - k :]
    cover = abs(int(h.det()))
    index = Fraction(den**k, cover)
    if index.denominator != 1:  # pragma: no cover
        raise ArithmeticError(f"lattice index {index} is not an integer")
    logger.debug("lattice_determinant: D = %d, index %s", den, index)
    return int(index)


def w_f(group: MatrixGroup) -> Fraction:
    """1/|Aut F|, the weight when every automorphism is an integer matrix."""
    if not group.is_integral:
        raise UnsupportedWeightError(
            "W_F for automorphism groups with non-integral entries needs the general weight formula"
        )
    return Fraction(1, group.order)
