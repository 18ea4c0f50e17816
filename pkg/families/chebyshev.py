"""Chebyshev polynomials, their binary forms, and the tilde forms V~_n, U~_n.

The tilde forms are scaled so that V~_n(x, 1) = 2 T_n(x/2) and
U~_{n+1}(x, 1) = U_n(x/2). With S = diag(2, 1) this gives

    (V~_n)_S = 2 * T_n(x, y)      (U~_{n+1})_S = U_n(x, y)

so automorphism groups transfer by conjugation with S.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import List, Literal, Tuple

from mpmath import mp
from sympy import divisors

from algebra.binary_form import BinaryForm, form_product, homogenize
from algebra.matrix import Mat2Q
from algebra.poly import IntPoly, Poly
from algebra.roots import ProjRoot
from errors import DegreeError, FactorizationError
from families.trig_minpoly import psi, psi_form

logger = logging.getLogger(__name__)

Kind = Literal["T", "U"]
TildeKind = Literal["vtilde", "utilde"]

# (V~_n)_S = 2 T_n and (U~_{n+1})_S = U_n
SCALING = Mat2Q.diag(2, 1)

_X = BinaryForm.of(1, 0)
_Y2 = BinaryForm.of(0, 0, 1)


@lru_cache(maxsize=None)
def chebyshev_T(n: int) -> IntPoly:
    if n < 0:
        raise DegreeError("T_n needs n >= 0")
    x = Poly.x()
    prev, cur = Poly.one(), x
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, x * cur * 2 - prev
    return cur


@lru_cache(maxsize=None)
def chebyshev_U(n: int) -> IntPoly:
    if n < 0:
        raise DegreeError("U_n needs n >= 0")
    x = Poly.x()
    prev, cur = Poly.one(), x * 2
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, x * cur * 2 - prev
    return cur


def t_form(n: int) -> BinaryForm:
    if n < 1:
        raise DegreeError("T_n(x, y) needs n >= 1")
    return homogenize(chebyshev_T(n), n)


def u_form(n: int) -> BinaryForm:
    if n < 1:
        raise DegreeError("U_n(x, y) needs n >= 1")
    return homogenize(chebyshev_U(n), n)


@lru_cache(maxsize=None)
def v_tilde(n: int) -> BinaryForm:
    """V~_0 = 2, V~_1 = x, V~_{k+1} = x V~_k - y^2 V~_{k-1}."""
    if n < 0:
        raise DegreeError("V~_n needs n >= 0")
    prev, cur = BinaryForm(0, (2,)), _X
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, _X * cur - _Y2 * prev
    return cur


@lru_cache(maxsize=None)
def u_tilde(n: int) -> BinaryForm:
    """U~_1 = 1, U~_2 = x, then the same recurrence as V~."""
    if n < 1:
        raise DegreeError("U~_n needs n >= 1")
    prev, cur = BinaryForm(0, (1,)), _X
    if n == 1:
        return prev
    for _ in range(n - 2):
        prev, cur = cur, _X * cur - _Y2 * prev
    return cur


@dataclass(frozen=True)
class TildeFactorization:
    """x^x_power times the product of Psi_d(x, y) over ``indices``."""

    kind: TildeKind
    n: int
    x_power: int
    indices: Tuple[int, ...]
    factors: Tuple[BinaryForm, ...] = field(repr=False)

    def product(self) -> BinaryForm:
        return form_product([_X] * self.x_power + list(self.factors))

    def to_json(self):
        return {
            "kind": self.kind,
            "n": self.n,
            "x_power": self.x_power,
            "psi_indices": list(self.indices),
            "factors": [str(f) for f in self.factors],
        }

    def __str__(self) -> str:
        parts = (["x"] * self.x_power) + [f"Psi_{d}" for d in self.indices]
        return " * ".join(parts) if parts else "1"


def _checked(fac: TildeFactorization, target: BinaryForm) -> TildeFactorization:
    got = fac.product()
    if got != target:
        raise FactorizationError(f"{fac.kind}_{fac.n}: product {got} differs from {target}")
    return fac


def factor_u_tilde(n: int) -> TildeFactorization:
    """U~_n = x^[n even] * prod Psi_d over d | 2n, d not in {1, 2, 4}."""
    if n < 1:
        raise DegreeError("U~_n needs n >= 1")
    idx = tuple(d for d in divisors(2 * n) if d not in (1, 2, 4))
    fac = TildeFactorization(
        kind="utilde",
        n=n,
        x_power=1 if n % 2 == 0 else 0,
        indices=idx,
        factors=tuple(psi_form(d) for d in idx),
    )
    return _checked(fac, u_tilde(n))


def factor_v_tilde(n: int) -> TildeFactorization:
    """V~_n = x^[n odd] * prod Psi_{4n/d} over odd d | n with d < n."""
    if n < 1:
        raise DegreeError("V~_n needs n >= 1")
    idx = tuple(4 * n // d for d in divisors(n) if d % 2 == 1 and d < n)
    fac = TildeFactorization(
        kind="vtilde",
        n=n,
        x_power=n % 2,
        indices=idx,
        factors=tuple(psi_form(m) for m in idx),
    )
    return _checked(fac, v_tilde(n))


def psi_factor_degrees(fac: TildeFactorization) -> List[int]:
    return [psi(d).degree for d in fac.indices]


# -----------------------------
# Closed-form roots
# -----------------------------
def chebyshev_roots(kind: Kind, n: int, precision: int = 192) -> List[ProjRoot]:
    """T_n: cos((2k+1)pi/2n), k < n.  U_n: cos(k pi/(n+1)), 1 <= k <= n."""
    if n < 1:
        raise DegreeError("n must be positive")
    with mp.workprec(precision):
        if kind == "T":
            return [
                ProjRoot.from_affine(mp.cos((2 * k + 1) * mp.pi / (2 * n)), tag=f"cos({2 * k + 1}pi/{2 * n})")
                for k in range(n)
            ]
        if kind == "U":
            return [
                ProjRoot.from_affine(mp.cos(k * mp.pi / (n + 1)), tag=f"cos({k}pi/{n + 1})")
                for k in range(1, n + 1)
            ]
    raise ValueError(f"unknown Chebyshev kind {kind!r}")


def tilde_roots(kind: TildeKind, n: int, precision: int = 192) -> List[ProjRoot]:
    """Roots of V~_n (2cos((2k+1)pi/2n)) or U~_n (2cos(k pi/n))."""
    with mp.workprec(precision):
        if kind == "vtilde":
            if n < 1:
                raise DegreeError("V~_n has roots for n >= 1")
            return [
                ProjRoot.from_affine(2 * mp.cos((2 * k + 1) * mp.pi / (2 * n)), tag=f"2cos({2 * k + 1}pi/{2 * n})")
                for k in range(n)
            ]
        if kind == "utilde":
            if n < 2:
                raise DegreeError("U~_n has roots for n >= 2")
            return [
                ProjRoot.from_affine(2 * mp.cos(k * mp.pi / n), tag=f"2cos({k}pi/{n})")
                for k in range(1, n)
            ]
    raise ValueError(f"unknown tilde kind {kind!r}")
