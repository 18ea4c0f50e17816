"""Area of the fundamental region {|F(x, y)| <= 1}.

In polar coordinates A = integral over [0, pi) of |F(cos t, sin t)|^(-2/d).
|F| is evaluated in factored form C * prod |b_k cos t - a_k sin t|, and the
interval is cut at the angles of the real roots. Each piece is integrated
from both ends towards its midpoint so the singular endpoint always sits at
offset 0, where tanh-sinh nodes are exact.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from mpmath import mp, mpf

from algebra.binary_form import BinaryForm
from algebra.roots import ProjRoot, projective_roots
from errors import DegreeError, QuadratureError
from settings import get_settings

logger = logging.getLogger(__name__)

QUAD_DEGREES = (6, 8, 10)


@dataclass(frozen=True)
class AreaResult:
    value: mpf
    error: mpf

    @property
    def divergent(self) -> bool:
        return False

    def to_json(self) -> Dict[str, Any]:
        return {"A": float(self.value), "A_err": float(self.error), "divergent": False}


@dataclass(frozen=True)
class Divergent:
    reason: str

    @property
    def divergent(self) -> bool:
        return True

    def to_json(self) -> Dict[str, Any]:
        return {"A": None, "A_err": None, "divergent": True, "reason": self.reason}


@dataclass
class _RealRoot:
    angle: mpf
    rho: mpf
    mult: int


def _group_real(roots: Sequence[ProjRoot], tol: mpf) -> Tuple[List[_RealRoot], List[ProjRoot]]:
    real: List[_RealRoot] = []
    cplx: List[ProjRoot] = []
    for r in roots:
        if not r.is_real(tol):
            cplx.append(r)
            continue
        theta = r.angle()
        rho = mp.sqrt(r.a.real**2 + r.b.real**2)
        for g in real:
            gap = abs(g.angle - theta)
            if min(gap, mp.pi - gap) < tol:
                g.mult += 1
                break
        else:
            real.append(_RealRoot(theta, rho, 1))
    real.sort(key=lambda g: g.angle)
    return real, cplx


def mp_value(form: BinaryForm, x: mpf, y: mpf) -> mpf:
    acc = mpf(0)
    ypow = mpf(1)
    terms = []
    for c in form.coeffs:
        q = Fraction(c)
        terms.append(mpf(q.numerator) / q.denominator * ypow)
        ypow *= y
    for t in terms:
        acc = acc * x + t
    return acc


class _Integrand:
    def __init__(self, form: BinaryForm, real: List[_RealRoot], cplx: List[ProjRoot], generic: mpf):
        self.d = form.degree
        self.real = real
        self.cplx = cplx
        self.trig = [(mp.cos(g.angle), mp.sin(g.angle)) for g in real]
        raw = abs(mp_value(form, mp.cos(generic), mp.sin(generic)))
        self.scale = raw / self._product(generic, None, None)

    def _product(self, theta: mpf, special: Optional[int], offset: Optional[mpf]) -> mpf:
        acc = mpf(1)
        c, s = mp.cos(theta), mp.sin(theta)
        for i, g in enumerate(self.real):
            if i == special:
                lin = abs(mp.sin(offset))
            else:
                ca, sa = self.trig[i]
                lin = abs(sa * c - ca * s)
            acc *= (g.rho * lin) ** g.mult
        for r in self.cplx:
            acc *= abs(r.b * c - r.a * s)
        return acc

    def at(self, theta: mpf, special: Optional[int] = None, offset: Optional[mpf] = None) -> mpf:
        return (self.scale * self._product(theta, special, offset)) ** (mpf(-2) / self.d)


def _quad(f, length: mpf, rel_tol: mpf) -> Tuple[mpf, mpf]:
    last: Tuple[mpf, mpf] = (mpf(0), mpf("inf"))
    for degree in QUAD_DEGREES:
        val, err = mp.quad(f, [0, length], error=True, method="tanh-sinh", maxdegree=degree)
        last = (val, err)
        if err <= rel_tol * abs(val):
            return last
        logger.debug("quadrature at maxdegree %d: err %s above target, retrying", degree, mp.nstr(err, 3))
    return last


def area_fundamental(
    form: BinaryForm,
    rel_tol: Optional[float] = None,
    *,
    roots: Optional[Sequence[ProjRoot]] = None,
    precision: Optional[int] = None,
) -> Union[AreaResult, Divergent]:
    settings = get_settings()
    rel_tol = rel_tol or settings.tol
    d = form.degree
    if d < 2:
        raise DegreeError("the fundamental region is bounded only for degree >= 2")
    if form.is_zero:
        raise DegreeError("the zero form has no fundamental region")

    dps = max(30, int(-mp.log10(rel_tol)) + 20)
    precision = max(precision or settings.precision, int(dps * 3.33) + 32)
    if roots is None:
        roots = projective_roots(form, precision)

    with mp.workdps(dps):
        real, cplx = _group_real(roots, mpf(10) ** (-(dps // 2)))
        for g in real:
            if 2 * g.mult >= d:
                return Divergent(f"real root of multiplicity {g.mult} makes |F|^(-2/{d}) non-integrable")

        if real:
            arcs = []
            for i, g in enumerate(real):
                nxt = real[(i + 1) % len(real)]
                end = nxt.angle if i + 1 < len(real) else nxt.angle + mp.pi
                arcs.append((i, (i + 1) % len(real), g.angle, end))
            widest = max(arcs, key=lambda a: a[3] - a[2])
            generic = (widest[2] + widest[3]) / 2
        else:
            arcs = []
            generic = mp.pi / 7

        f = _Integrand(form, real, cplx, generic)
        tol = mpf(rel_tol) / 4
        total, err = mpf(0), mpf(0)
        if not arcs:
            total, err = _quad(lambda t: f.at(t), mp.pi, tol)
        for left, right, lo, hi in arcs:
            half = (hi - lo) / 2
            v1, e1 = _quad(lambda t: f.at(lo + t, left, t), half, tol)
            v2, e2 = _quad(lambda t: f.at(hi - t, right, t), half, tol)
            total += v1 + v2
            err += e1 + e2

        err = max(err, abs(total) * mpf(10) ** (-(dps - 5)))
        if err > rel_tol * abs(total):
            raise QuadratureError(
                f"area of a degree {d} form reached error {mp.nstr(err, 3)}, above {rel_tol} relative"
            )
        logger.debug("area_fundamental: degree %d, %d arcs, A = %s", d, len(arcs), mp.nstr(total, 12))
        return AreaResult(+total, +err)
