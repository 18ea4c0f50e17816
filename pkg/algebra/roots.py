from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from mpmath import mp, mpc, mpf
from mpmath.libmp import NoConvergence
from tenacity import Retrying, before_sleep_log, retry_if_exception_type, stop_after_attempt

from algebra.binary_form import BinaryForm
from algebra.poly import Poly
from errors import DegreeError, PrecisionError
from settings import get_settings

logger = logging.getLogger(__name__)

# precision is doubled between attempts: 192 -> 384 -> 768 -> 1536 bits
PRECISION_ATTEMPTS = 4


@dataclass(frozen=True)
class ProjRoot:
    """A point [a : b] of the complex projective line.

    The larger-magnitude coordinate is exactly 1. ``tag`` names a closed form
    (e.g. ``2cos(2pi*3/7)``) when the root is known exactly.
    """

    a: mpc
    b: mpc
    tag: Optional[str] = None

    @classmethod
    def normalized(cls, a: Any, b: Any, tag: Optional[str] = None) -> "ProjRoot":
        a, b = mpc(a), mpc(b)
        if a == 0 and b == 0:
            raise ValueError("[0 : 0] is not a projective point")
        if abs(a) >= abs(b):
            return cls(mpc(1), b / a, tag)
        return cls(a / b, mpc(1), tag)

    @classmethod
    def from_affine(cls, z: Any, tag: Optional[str] = None) -> "ProjRoot":
        return cls.normalized(z, 1, tag)

    @classmethod
    def infinity(cls) -> "ProjRoot":
        return cls(mpc(1), mpc(0), "inf")

    @property
    def is_infinite(self) -> bool:
        return self.b == 0

    def affine(self) -> Optional[mpc]:
        return None if self.is_infinite else self.a / self.b

    def is_real(self, tol: Optional[mpf] = None) -> bool:
        if tol is None:
            tol = mpf(2) ** (-(mp.prec // 2))
        return abs(self.a.imag) <= tol and abs(self.b.imag) <= tol

    def angle(self) -> mpf:
        """Polar angle in [0, pi) of the real line through this (real) root."""
        theta = mp.atan2(self.b.real, self.a.real)
        if theta < 0:
            theta += mp.pi
        if theta >= mp.pi:
            theta -= mp.pi
        return theta

    def as_complex(self) -> Tuple[complex, complex]:
        return complex(self.a), complex(self.b)

    def chordal_distance(self, other: "ProjRoot") -> mpf:
        num = abs(self.a * other.b - other.a * self.b)
        den = mp.sqrt(abs(self.a) ** 2 + abs(self.b) ** 2) * mp.sqrt(abs(other.a) ** 2 + abs(other.b) ** 2)
        return num / den

    def to_json(self) -> Dict[str, Any]:
        return {
            "a": [mp.nstr(self.a.real, 20), mp.nstr(self.a.imag, 20)],
            "b": [mp.nstr(self.b.real, 20), mp.nstr(self.b.imag, 20)],
            "tag": self.tag,
        }

    def __str__(self) -> str:
        if self.is_infinite:
            return "[1:0]"
        return f"[{mp.nstr(self.affine(), 12)}:1]"


class _UncertifiedRoots(ArithmeticError):
    pass


def _mp_coeffs(p: Poly) -> List[mpf]:
    out = []
    for c in reversed(p.coeffs):
        q = Fraction(c)
        out.append(mpf(q.numerator) / q.denominator)
    return out


def _polyroots(p: Poly, prec: int, target: int) -> List[ProjRoot]:
    deg = p.degree
    with mp.workprec(prec):
        coeffs = _mp_coeffs(p)
        found = mp.polyroots(coeffs, maxsteps=max(50, 25 * deg), extraprec=prec)
        tol = mpf(2) ** (-(target // 2))
        scale = sum(abs(c) for c in coeffs)
        out: List[ProjRoot] = []
        for z in found:
            z = mpc(z)
            val = abs(mp.polyval(coeffs, z))
            if abs(z) > 1:
                val /= abs(z) ** deg
            if val / scale > tol:
                raise _UncertifiedRoots(f"residual {mp.nstr(val / scale, 5)} above 2^-{target // 2}")
            out.append(ProjRoot.from_affine(z))
    return out


def _isolate(p: Poly, precision: int) -> List[ProjRoot]:
    retrying = Retrying(
        stop=stop_after_attempt(PRECISION_ATTEMPTS),
        retry=retry_if_exception_type((NoConvergence, _UncertifiedRoots)),
        before_sleep=before_sleep_log(logger, logging.WARNING),
        reraise=True,
    )
    try:
        for attempt in retrying:
            with attempt:
                prec = precision << (attempt.retry_state.attempt_number - 1)
                return _polyroots(p, prec, precision)
    except (NoConvergence, _UncertifiedRoots) as e:
        raise PrecisionError(
            f"roots of a degree {p.degree} factor not isolated after {PRECISION_ATTEMPTS} precision doublings: {e}"
        ) from e
    raise PrecisionError("root isolation did not run")  # pragma: no cover


def projective_roots(form: BinaryForm, precision: Optional[int] = None) -> List[ProjRoot]:
    """The multiset of projective roots of ``form``, with multiplicity."""
    if form.degree < 1:
        raise DegreeError("a form of degree 0 has no roots")
    if form.is_zero:
        raise ValueError("the zero form has no finite root set")
    precision = precision or get_settings().precision

    roots: List[ProjRoot] = [ProjRoot.infinity()] * form.infinity_multiplicity
    p = form.dehomogenize()
    for factor, mult in p.squarefree_decomposition():
        for r in _isolate(factor, precision):
            roots.extend([r] * mult)

    if len(roots) != form.degree:  # pragma: no cover
        raise PrecisionError(f"found {len(roots)} roots for a degree {form.degree} form")
    return roots
