"""Automorphism groups of binary forms by exact root-mapping search.

Every rational M with F_M = c*F permutes the projective roots of F, and a
Moebius map is fixed by the images of three points. The search therefore
tries each ordered image of one well-separated source triple, screens the
candidate in double precision, refines the survivors with mpmath, rebuilds
the entries as rationals and keeps only matrices that pass an exact check.
"""
from __future__ import annotations

import bisect
import itertools
import logging
from fractions import Fraction
from math import gcd, isqrt
from typing import Dict, List, Optional, Sequence, Set, Tuple

from mpmath import mp, mpc, mpf
from sympy import integer_nthroot

from algebra.binary_form import BinaryForm
from algebra.matrix import Mat2Q
from algebra.roots import ProjRoot, projective_roots
from autgroup.groups import AutResult, group_closure
from errors import DegreeError, SingularMatrixError
from settings import get_settings
from utils.pool import ordered_map

logger = logging.getLogger(__name__)

SCREEN_TOL = 1e-7
DEFAULT_BRUTE_HEIGHT = 6


def is_automorphism(form: BinaryForm, m: Mat2Q, allow_sign: bool = False) -> bool:
    if m.det == 0:
        raise SingularMatrixError(f"{m} is singular")
    image = form.substitute(m)
    return image == form or (allow_sign and image == -form)


# -----------------------------
# Rational helpers
# -----------------------------
def rational_root(c: Fraction, d: int) -> Optional[Fraction]:
    """The positive rational mu with mu^d = |c|, if there is one."""
    c = abs(Fraction(c))
    if c == 0:
        return None
    p, exact_p = integer_nthroot(c.numerator, d)
    if not exact_p:
        return None
    q, exact_q = integer_nthroot(c.denominator, d)
    if not exact_q:
        return None
    return Fraction(int(p), int(q))


def reconstruct_rational(x: mpf, denom_bound: int, tol: mpf) -> Optional[Fraction]:
    """Best continued-fraction approximation with denominator <= denom_bound within tol."""
    h0, h1 = 0, 1
    k0, k1 = 1, 0
    rest = x
    for _ in range(128):
        a = int(mp.floor(rest))
        h0, h1 = h1, a * h1 + h0
        k0, k1 = k1, a * k1 + k0
        if k1 > denom_bound:
            return None
        if abs(x - mpf(h1) / k1) < tol:
            return Fraction(h1, k1)
        frac = rest - a
        if frac == 0:
            return None
        rest = 1 / frac
    return None


def primitive_integer_matrix(entries: Sequence[Fraction]) -> Tuple[int, int, int, int]:
    den = 1
    for e in entries:
        den = den * e.denominator // gcd(den, e.denominator)
    ints = [int(e * den) for e in entries]
    g = 0
    for v in ints:
        g = gcd(g, v)
    return tuple(v // g for v in ints)  # type: ignore[return-value]


def scaled_automorphisms(form: BinaryForm, n: Tuple[int, int, int, int]) -> Tuple[List[Mat2Q], List[Mat2Q]]:
    """Exact check of an integer candidate N.

    Returns (fixing, sign_fixing): the matrices N/mu with F_{N/mu} = F, and
    those with F_{N/mu} = -F.
    """
    d = form.degree
    cand = Mat2Q.of(*n)
    if cand.det == 0:
        return [], []
    c = form.proportionality(form.substitute(cand))
    if c is None:
        return [], []
    mu = rational_root(Fraction(c), d)
    if mu is None:
        return [], []
    fixing, flipping = [], []
    for m in (cand / mu, cand / -mu):
        image = form.substitute(m)
        if image == form:
            fixing.append(m)
        elif image == -form:
            flipping.append(m)
    return fixing, flipping


# -----------------------------
# Double-precision screen
# -----------------------------
def _sphere_key(a: complex, b: complex) -> float:
    # first coordinate of the point on the Riemann sphere; Lipschitz in chordal distance
    denom = abs(a) ** 2 + abs(b) ** 2
    return 2 * (a * b.conjugate()).real / denom


def _chordal(p: Tuple[complex, complex], q: Tuple[complex, complex]) -> float:
    num = abs(p[0] * q[1] - q[0] * p[1])
    return num / ((abs(p[0]) ** 2 + abs(p[1]) ** 2) ** 0.5 * (abs(q[0]) ** 2 + abs(q[1]) ** 2) ** 0.5)


class _RootIndex:
    def __init__(self, points: Sequence[Tuple[complex, complex]], tol: float):
        self.points = list(points)
        self.tol = tol
        order = sorted(range(len(points)), key=lambda i: _sphere_key(*points[i]))
        self.order = order
        self.keys = [_sphere_key(*points[i]) for i in order]

    def match(self, p: Tuple[complex, complex]) -> Optional[int]:
        k = _sphere_key(*p)
        lo = bisect.bisect_left(self.keys, k - 2 * self.tol)
        hi = bisect.bisect_right(self.keys, k + 2 * self.tol)
        for j in range(lo, hi):
            i = self.order[j]
            if _chordal(self.points[i], p) < self.tol:
                return i
        return None


def _det3(m) -> complex:
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def _moebius_from_triples(src, dst):
    """Null vector (s, u, t, v) of the rows (d*a, d*b, -c*a, -c*b)."""
    rows = [(d * a, d * b, -c * a, -c * b) for (a, b), (c, d) in zip(src, dst)]
    out = []
    for j in range(4):
        minor = [[r[k] for k in range(4) if k != j] for r in rows]
        out.append((-1) ** j * _det3(minor))
    return out


def _apply(m, p):
    s, u, t, v = m
    a, b = p
    return (s * a + u * b, t * a + v * b)


def _maps_roots(m, points, rest, used, index, tol) -> bool:
    scale = max(abs(e) for e in m)
    if scale == 0:
        return False
    m = [e / scale for e in m]
    if abs(m[0] * m[3] - m[1] * m[2]) < tol:
        return False
    used = set(used)
    for p in rest:
        q = _apply(m, p)
        if abs(q[0]) + abs(q[1]) == 0:
            return False
        hit = index.match(q)
        if hit is None or hit in used:
            return False
        used.add(hit)
    return True


def _screen_triples(points, src_idx, triples, tol) -> List[Tuple[int, int, int]]:
    index = _RootIndex(points, tol)
    src = [points[s] for s in src_idx]
    rest = [p for idx, p in enumerate(points) if idx not in src_idx]
    hits = []
    for i, j, k in triples:
        m = _moebius_from_triples(src, (points[i], points[j], points[k]))
        if _maps_roots(m, points, rest, (i, j, k), index, tol):
            hits.append((i, j, k))
    return hits


def _screen_first_image(args) -> List[Tuple[int, int, int]]:
    """Image triples (i, j, k) with fixed i whose Moebius map permutes the roots."""
    points, src_idx, i, tol = args
    n = len(points)
    triples = ((i, j, k) for j in range(n) if j != i for k in range(n) if k not in (i, j))
    return _screen_triples(points, src_idx, triples, tol)


def _galois_triples(
    galois: Sequence[Sequence[int]], src_idx: Tuple[int, int, int], d: int
) -> List[Tuple[int, int, int]]:
    """Image triples compatible with a simply transitive abelian Galois action.

    A rational M commutes with the action, so M(g(r_0)) = g(M(r_0)) and the
    image of root 0 fixes the images of all the others.
    """
    by_first = {perm[0]: perm for perm in galois}
    if len(by_first) != d or any(len(perm) != d for perm in galois):
        raise DegreeError("the Galois permutations must act simply transitively on the roots")
    return [tuple(by_first[s][j] for s in src_idx) for j in range(d)]  # type: ignore[misc]


# -----------------------------
# Refinement
# -----------------------------
def _source_triple(roots: Sequence[ProjRoot]) -> Tuple[int, int, int]:
    """Greedy max-min separated triple of root indices."""
    n = len(roots)
    best = (0, 1)
    best_d = mpf(-1)
    for a, b in itertools.combinations(range(n), 2):
        dist = roots[a].chordal_distance(roots[b])
        if dist > best_d:
            best, best_d = (a, b), dist
    a, b = best
    third, third_d = None, mpf(-1)
    for c in range(n):
        if c in (a, b):
            continue
        dist = min(roots[c].chordal_distance(roots[a]), roots[c].chordal_distance(roots[b]))
        if dist > third_d:
            third, third_d = c, dist
    return a, b, third


def _refine(
    roots: Sequence[ProjRoot], src_idx: Tuple[int, int, int], dst_idx: Tuple[int, int, int], denom_bound: int
) -> Optional[Tuple[int, int, int, int]]:
    src = [(roots[i].a, roots[i].b) for i in src_idx]
    dst = [(roots[i].a, roots[i].b) for i in dst_idx]
    m = _moebius_from_triples(src, dst)
    pivot = max(m, key=abs)
    if pivot == 0:
        return None
    m = [mpc(e) / pivot for e in m]
    tol = mpf(2) ** (-(mp.prec // 4))
    if any(abs(e.imag) > tol for e in m):
        return None
    entries = []
    for e in m:
        q = reconstruct_rational(e.real, denom_bound, tol)
        if q is None:
            return None
        entries.append(q)
    if entries[0] * entries[3] == entries[1] * entries[2]:
        return None
    return primitive_integer_matrix(entries)


def _distinct(roots: Sequence[ProjRoot]) -> bool:
    tol = mpf(2) ** (-(mp.prec // 4))
    return all(r.chordal_distance(s) > tol for r, s in itertools.combinations(roots, 2))


def aut_search(
    form: BinaryForm,
    *,
    precision: Optional[int] = None,
    denom_bound: Optional[int] = None,
    roots: Optional[Sequence[ProjRoot]] = None,
    galois: Optional[Sequence[Sequence[int]]] = None,
    jobs: int = 1,
) -> AutResult:
    """Aut F and Aut|F| by mapping a source root triple onto every ordered root triple.

    ``roots`` may carry closed-form roots; then the discriminant is not
    computed and distinctness is checked numerically. ``galois`` lists the
    Galois action on those roots as index permutations (see psi_galois);
    for an irreducible form with abelian Galois group it cuts the
    candidates from d(d-1)(d-2) to d.
    """
    settings = get_settings()
    precision = precision or settings.precision
    denom_bound = denom_bound or settings.denom_bound
    d = form.degree
    if d < 3:
        raise DegreeError("automorphism search needs degree >= 3")
    if form.is_zero:
        raise DegreeError("the zero form has no finite automorphism group")
    if galois is not None and roots is None:
        raise DegreeError("a Galois action needs the roots it permutes")

    with mp.workprec(precision):
        if roots is None:
            if form.discriminant() == 0:
                raise DegreeError("zero discriminant: repeated roots give no finite automorphism group")
            roots = projective_roots(form, precision)
        else:
            roots = list(roots)
            if len(roots) != d:
                raise DegreeError(f"expected {d} roots, got {len(roots)}")
            if not _distinct(roots):
                raise DegreeError("supplied roots are not distinct")

        src_idx = _source_triple(roots)
        points = [r.as_complex() for r in roots]
        if galois is not None:
            triples = _galois_triples(galois, src_idx, d)
            logger.debug("aut_search: degree %d, %d Galois-compatible triples", d, len(triples))
            hits = _screen_triples(points, src_idx, triples, SCREEN_TOL)
        else:
            tasks = [(points, src_idx, i, SCREEN_TOL) for i in range(d)]
            logger.debug("aut_search: degree %d, %d candidate triples", d, d * (d - 1) * (d - 2))
            hits = [h for block in ordered_map(_screen_first_image, tasks, jobs=jobs) for h in block]
        logger.debug("aut_search: %d candidates survived the screen", len(hits))

        fixing: Set[Mat2Q] = {Mat2Q.identity()}
        signed: Set[Mat2Q] = {Mat2Q.identity(), -Mat2Q.identity()}
        seen: Set[Tuple[int, int, int, int]] = set()
        for dst_idx in hits:
            n = _refine(roots, src_idx, dst_idx, denom_bound)
            if n is None or n in seen:
                continue
            seen.add(n)
            fix, flip = scaled_automorphisms(form, n)
            fixing.update(fix)
            signed.update(fix)
            signed.update(flip)

    aut = group_closure(fixing)
    aut_abs = group_closure(signed)
    return AutResult(aut=aut, aut_abs=aut_abs, method="search", form=form)


def aut_brute_force(form: BinaryForm, height: int = DEFAULT_BRUTE_HEIGHT) -> AutResult:
    """Every M = N/mu with integer N of height <= ``height``.

    det M = +-1 for a finite-order M, so mu^2 = |det N| must be a square,
    and the corner coefficients F(s, t), F(u, v) of F_N must be +-mu^d
    times those of F before the full substitution is tried.
    """
    d = form.degree
    if d < 3:
        raise DegreeError("brute-force search needs degree >= 3")
    c0, cd = form.coeffs[0], form.coeffs[-1]
    fixing: Set[Mat2Q] = {Mat2Q.identity()}
    signed: Set[Mat2Q] = {Mat2Q.identity(), -Mat2Q.identity()}
    corner: Dict[Tuple[int, int], object] = {}

    def value(x: int, y: int):
        key = (x, y)
        if key not in corner:
            corner[key] = form(x, y)
        return corner[key]

    rng = range(-height, height + 1)
    for s, u, t, v in itertools.product(rng, repeat=4):
        det = s * v - u * t
        if det == 0:
            continue
        mu = isqrt(abs(det))
        if mu * mu != abs(det):
            continue
        scale = mu**d
        if abs(value(s, t)) != abs(scale * c0) or abs(value(u, v)) != abs(scale * cd):
            continue
        fix, flip = scaled_automorphisms(form, (s, u, t, v))
        fixing.update(fix)
        signed.update(fix)
        signed.update(flip)

    return AutResult(
        aut=group_closure(fixing),
        aut_abs=group_closure(signed),
        method=f"brute:{height}",
        form=form,
    )
