from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Optional, Sequence

from algebra.binary_form import BinaryForm
from algebra.roots import ProjRoot
from autgroup.groups import AutResult, GroupClass, classify_group
from autgroup.oracles import area_limit
from autgroup.search import aut_search
from invariants.area import area_fundamental
from errors import UnsupportedWeightError
from invariants.lattice import lattice_determinant, w_f
from utils.json_io import format_rational

logger = logging.getLogger(__name__)

OUT_OF_SCOPE = "out of theorem scope"
NON_INTEGRAL = "non-integral automorphisms: W needs the general weight formula"


@dataclass(frozen=True)
class InvariantReport:
    degree: int
    group_class: Optional[GroupClass]
    aut_order: Optional[int]
    m: Optional[int]
    W: Optional[Fraction]
    A: Optional[float]
    A_err: Optional[float]
    C: Optional[float]
    C_err: Optional[float]
    divergent: bool
    scope_note: Optional[str] = None
    c_limit: Optional[float] = None

    def to_json(self) -> Dict[str, Any]:
        return {
            "degree": self.degree,
            "class": self.group_class.value if self.group_class else None,
            "order": self.aut_order,
            "m": self.m,
            "W": format_rational(self.W) if self.W is not None else None,
            "A": self.A,
            "A_err": self.A_err,
            "C": self.C,
            "C_err": self.C_err,
            "divergent": self.divergent,
            "scope_note": self.scope_note,
            "c_limit": self.c_limit,
        }


def c_f(
    form: BinaryForm,
    *,
    family: Optional[str] = None,
    aut: Optional[AutResult] = None,
    roots: Optional[Sequence[ProjRoot]] = None,
    rel_tol: Optional[float] = None,
    precision: Optional[int] = None,
    denom_bound: Optional[int] = None,
) -> InvariantReport:
    """Group, lattice determinant, W, A and C = W*A for one form.

    ``family`` (psi, pi, T, U) only adds the limiting constant W * lim A.
    """
    d = form.degree
    area = area_fundamental(form, rel_tol, roots=roots, precision=precision)
    a_val = None if area.divergent else float(area.value)
    a_err = None if area.divergent else float(area.error)

    if d < 3:
        # quadratic forms can have infinite automorphism groups
        return InvariantReport(
            degree=d,
            group_class=None,
            aut_order=None,
            m=None,
            W=None,
            A=a_val,
            A_err=a_err,
            C=None,
            C_err=None,
            divergent=area.divergent,
            scope_note=OUT_OF_SCOPE,
        )

    if aut is None:
        aut = aut_search(form, precision=precision, denom_bound=denom_bound, roots=roots)
    group = aut.aut
    m = lattice_determinant(group)
    try:
        weight = w_f(group)
    except UnsupportedWeightError as e:
        logger.info("c_f: %s (m = %d)", e, m)
        weight = None
    c_val = c_err = limit = None
    if weight is not None:
        if not area.divergent:
            c_val = float(weight) * a_val
            c_err = float(weight) * a_err
        if family:
            limit = float(weight * area_limit(family))
    logger.debug("c_f: degree %d, |Aut| = %d, m = %d, W = %s, A = %s", d, group.order, m, weight, a_val)
    return InvariantReport(
        degree=d,
        group_class=classify_group(group),
        aut_order=group.order,
        m=m,
        W=weight,
        A=a_val,
        A_err=a_err,
        C=c_val,
        C_err=c_err,
        divergent=area.divergent,
        scope_note=None if weight is not None else NON_INTEGRAL,
        c_limit=limit,
    )
