"""Exact count of the integers a definite binary form represents up to a bound."""
from __future__ import annotations

import logging
from math import ceil
from typing import Set, Tuple

from mpmath import mp, mpf

from algebra.binary_form import BinaryForm
from algebra.roots import projective_roots
from errors import DegreeError, IndefiniteFormError
from invariants.area import mp_value
from utils.pool import ordered_map

logger = logging.getLogger(__name__)

SAMPLES_PER_DEGREE = 2048


def _min_on_circle(form: BinaryForm) -> mpf:
    """min |F(cos t, sin t)| over a dense grid, halved to cover the grid gap."""
    n = SAMPLES_PER_DEGREE * form.degree
    with mp.workdps(30):
        best = min(abs(mp_value(form, mp.cos(mp.pi * k / n), mp.sin(mp.pi * k / n))) for k in range(n))
        return best / 2


def _slice_values(args: Tuple[Tuple[int, ...], int, int, int]) -> Set[int]:
    coeffs, x, radius, bound = args
    out = set()
    for y in range(-radius, radius + 1):
        acc = 0
        ypow = 1
        # F(x, y) = sum c_i x^(d-i) y^i, Horner in x
        terms = []
        for c in coeffs:
            terms.append(c * ypow)
            ypow *= y
        for t in terms:
            acc = acc * x + t
        if abs(acc) <= bound:
            out.add(acc)
    return out


def search_radius(form: BinaryForm, bound: int) -> int:
    lam = _min_on_circle(form)
    if lam <= 0:  # pragma: no cover
        raise IndefiniteFormError("|F| vanishes on the unit circle")
    if bound == 0:
        return 0
    with mp.workdps(30):
        return int(ceil(float((mpf(bound) / lam) ** (mpf(1) / form.degree))))


def count_represented(form: BinaryForm, bound: int, *, jobs: int = 1, progress: bool = False) -> int:
    """Number of distinct h with |h| <= bound and F(x, y) = h for some integers x, y."""
    if form.degree < 1:
        raise DegreeError("need a form of positive degree")
    if not form.is_integral:
        raise DegreeError("count_represented needs integer coefficients")
    if bound < 0:
        raise ValueError("bound must be non-negative")
    if any(r.is_real() for r in projective_roots(form)):
        raise IndefiniteFormError(f"{form} has a real root; {{|F| <= Z}} is unbounded")

    radius = search_radius(form, bound)
    logger.info("count_represented: degree %d, Z = %d, box radius %d", form.degree, bound, radius)
    coeffs = tuple(int(c) for c in form.coeffs)
    tasks = [(coeffs, x, radius, bound) for x in range(-radius, radius + 1)]
    values: Set[int] = set()
    for chunk in ordered_map(_slice_values, tasks, jobs=jobs, desc="count", progress=progress):
        values |= chunk
    return len(values)


def count_ratio(form: BinaryForm, bound: int, c_value: float, *, jobs: int = 1) -> float:
    """R(Z) * Z^(-2/d) / C, which tends to 1."""
    count = count_represented(form, bound, jobs=jobs)
    return count / (bound ** (2 / form.degree)) / c_value

