"""Cyclotomic polynomials and the minimal polynomials of 2cos(2*pi/n) and 2sin(2*pi/n).

Psi_n is the minimal polynomial of 2cos(2*pi/n); Pi_n = Psi_{c(n)} is the one of
2sin(2*pi/n). Everything here is exact: the sweeps that were originally run in
floating point (reciprocity, |Psi_n(1)| < 2^d) are done with integers.
"""
from __future__ import annotations

import logging
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Dict, List, Literal, Tuple

from mpmath import mp, mpf
from sympy import divisors, factorint, totient

from algebra.binary_form import BinaryForm, homogenize
from algebra.poly import IntPoly, Poly
from algebra.roots import ProjRoot
from errors import DegreeError, InexactDivisionError
from families.eisenstein import ONE, EisensteinValue

logger = logging.getLogger(__name__)

# Psi_n has degree <= 2 exactly for these n
SMALL_COS_INDICES = frozenset({1, 2, 3, 4, 5, 6, 8, 10, 12})


# -----------------------------
# Arithmetic helpers
# -----------------------------
def phi(n: int) -> int:
    return int(totient(n))


def mobius(n: int) -> int:
    exps = factorint(n)
    if any(e > 1 for e in exps.values()):
        return 0
    return -1 if len(exps) % 2 else 1


def _radical(n: int) -> int:
    r = 1
    for p in factorint(n):
        r *= p
    return r


def _mul_xd_minus_1(c: List[int], d: int) -> List[int]:
    out = [0] * (len(c) + d)
    for i, a in enumerate(c):
        out[i + d] += a
        out[i] -= a
    return out


def _div_xd_minus_1(c: List[int], d: int) -> List[int]:
    n = len(c) - d
    q = [0] * n
    for i in range(n):
        q[i] = (q[i - d] if i >= d else 0) - c[i]
    # the top d coefficients must agree with the quotient
    for i in range(n, len(c)):
        if c[i] != (q[i - d] if 0 <= i - d < n else 0):
            raise InexactDivisionError(f"x^{d} - 1 does not divide the running product")
    return q


# -----------------------------
# Cyclotomic and Psi
# -----------------------------
@lru_cache(maxsize=None)
def cyclotomic(n: int) -> IntPoly:
    """The n-th cyclotomic polynomial.

    Computed as Phi_rad(n)(x^(n/rad(n))) with Phi_rad(n) = prod (x^d - 1)^mu(r/d),
    so every step is a linear pass multiplying or dividing by x^d - 1.
    """
    if n < 1:
        raise DegreeError("cyclotomic polynomials are indexed by n >= 1")
    r = _radical(n)
    num = [d for d in divisors(r) if mobius(r // d) == 1]
    den = [d for d in divisors(r) if mobius(r // d) == -1]
    coeffs = [1]
    for d in num:
        coeffs = _mul_xd_minus_1(coeffs, d)
    for d in den:
        coeffs = _div_xd_minus_1(coeffs, d)
    if coeffs and coeffs[-1] < 0:
        coeffs = [-a for a in coeffs]
    stretch = n // r
    if stretch > 1:
        spread = [0] * ((len(coeffs) - 1) * stretch + 1)
        for i, a in enumerate(coeffs):
            spread[i * stretch] = a
        coeffs = spread
    return Poly(tuple(coeffs))


@lru_cache(maxsize=None)
def psi(n: int) -> IntPoly:
    """Minimal polynomial of 2cos(2*pi/n), from Phi_n via z^-d Phi_n(z) = Psi_n(z + 1/z)."""
    if n < 1:
        raise DegreeError("Psi_n is indexed by n >= 1")
    if n == 1:
        return Poly((-2, 1))
    if n == 2:
        return Poly((2, 1))
    a = cyclotomic(n).coeffs
    d = (len(a) - 1) // 2
    w = Poly.x()
    # V_0 = 2, V_1 = w, V_{k+1} = w V_k - V_{k-1}; V_k(z + 1/z) = z^k + z^-k
    prev, cur = Poly((2,)), w
    acc = Poly((a[d],))
    for k in range(1, d + 1):
        if a[d + k]:
            acc = acc + cur * a[d + k]
        prev, cur = cur, w * cur - prev
    return acc


def psi_form(n: int) -> BinaryForm:
    p = psi(n)
    return homogenize(p, p.degree)


def c_of_n(n: int) -> int:
    """Denominator of (n - 4)/(4n) in lowest terms."""
    if n < 1:
        raise DegreeError("c(n) is defined for n >= 1")
    if n == 4:
        raise DegreeError("c(4) is undefined: (n - 4)/(4n) vanishes")
    return 4 * n // gcd(abs(n - 4), 4 * n)


def pi_form(n: int) -> BinaryForm:
    return psi_form(c_of_n(n))


def pi_degree(n: int) -> int:
    if n in (1, 2, 4):
        raise DegreeError(f"Pi_{n} is degenerate")
    g = gcd(n, 8)
    f = phi(n)
    if g < 4:
        d = f
    elif g == 4:
        d = f // 4
    else:
        d = f // 2
    assert d == psi(c_of_n(n)).degree, f"degree formula disagrees with Psi_c({n})"
    return d


def psi_roots(n: int, precision: int = 192) -> List[ProjRoot]:
    """Closed-form roots [2cos(2*pi*k/n) : 1] of Psi_n."""
    if n == 1:
        ks = [0]
    elif n == 2:
        ks = [1]
    else:
        ks = [k for k in range(1, (n + 1) // 2) if 2 * k < n and gcd(k, n) == 1]
    with mp.workprec(precision):
        return [
            ProjRoot.from_affine(2 * mp.cos(2 * mp.pi * k / n), tag=f"2cos(2pi*{k}/{n})")
            for k in ks
        ]


def pi_roots(n: int, precision: int = 192) -> List[ProjRoot]:
    return psi_roots(c_of_n(n), precision)


def psi_galois(n: int) -> List[List[int]]:
    """Galois action on psi_roots(n) as index permutations.

    The unit a mod n sends 2cos(2*pi*k/n) to 2cos(2*pi*a*k/n). Entry t is
    the permutation for a = k_t, so perm[0] == t.
    """
    if n < 3:
        return [[0]]
    ks = [k for k in range(1, (n + 1) // 2) if 2 * k < n and gcd(k, n) == 1]
    pos = {k: i for i, k in enumerate(ks)}

    def fold(m: int) -> int:
        m %= n
        return min(m, n - m)

    return [[pos[fold(a * k)] for k in ks] for a in ks]


def pi_galois(n: int) -> List[List[int]]:
    return psi_galois(c_of_n(n))


def psi_from_roots(n: int, precision: int = 128) -> IntPoly:
    """Expand prod (x - 2cos(2*pi*k/n)) numerically and round to integers."""
    roots = psi_roots(n, precision)
    with mp.workprec(precision):
        coeffs = [mpf(1)]
        for r in roots:
            z = r.affine().real
            nxt = [mpf(0)] * (len(coeffs) + 1)
            for i, c in enumerate(coeffs):
                nxt[i + 1] += c
                nxt[i] -= c * z
            coeffs = nxt
        tol = mpf(2) ** -40
        out = []
        for c in coeffs:
            rounded = int(mp.nint(c))
            if abs(c - rounded) >= tol:
                raise ArithmeticError(f"coefficient {mp.nstr(c, 20)} of Psi_{n} is not near an integer")
            out.append(rounded)
    return Poly(tuple(out))


def lehmer_identity_holds(n: int) -> bool:
    """z^d * Psi_n(z + 1/z) == Phi_n(z), checked exactly."""
    if n < 3:
        raise DegreeError("the identity is stated for n >= 3")
    p = psi(n)
    d = p.degree
    z2p1 = Poly((1, 0, 1))
    acc = Poly.zero()
    for k, c in enumerate(p.coeffs):
        if c:
            acc = acc + (z2p1 ** k).shift(d - k) * c
    return acc == cyclotomic(n)


# -----------------------------
# Coefficient formulas
# -----------------------------
def constant_coeff_formula(m: int) -> int:
    """|Psi_m(0)| by the four-case formula (valid for m >= 3)."""
    if m < 1:
        raise DegreeError("m must be positive")
    if m == 4:
        return 0
    if m >= 8 and m & (m - 1) == 0:
        return 2
    if m % 4 == 0:
        rest = factorint(m // 4)
        if len(rest) == 1:
            (p,) = rest
            if p % 2:
                return p
    return 1


def field_discriminant(k: int) -> int:
    """Discriminant of Q(2cos(2*pi/k)) by Lehmer's three-case formula."""
    if k < 1:
        raise DegreeError("k must be positive")
    if k in (1, 2, 3, 4, 6):
        return 1
    fac = factorint(k)
    odd = {p: e for p, e in fac.items() if p != 2}
    if not odd:
        j = fac[2]
        return 2 ** ((j - 1) * 2 ** (j - 2) - 1)
    if len(odd) == 1 and fac.get(2, 0) <= 1:
        ((p, j),) = odd.items()
        return p ** ((j * p**j - (j + 1) * p ** (j - 1) - 1) // 2)
    half = Fraction(phi(k), 2)
    out = 1
    for p, e in fac.items():
        exp = (e - Fraction(1, p - 1)) * half
        if exp.denominator != 1:
            raise ArithmeticError(f"non-integral exponent {exp} for p = {p} in disc(k = {k})")
        out *= p ** int(exp)
    return out


def cos_fields_coincide(k: int, l: int) -> bool:
    """Whether Q(2cos(2*pi/k)) = Q(2cos(2*pi/l))."""
    rational = {1, 2, 3, 4, 6}
    if k in rational or l in rational:
        return k in rational and l in rational
    if k == l:
        return True
    lo, hi = sorted((k, l))
    return lo % 2 == 1 and hi == 2 * lo


def is_reciprocal(p: IntPoly) -> bool:
    if p.is_zero or p.coeffs[0] == 0:
        raise ValueError("reciprocity is only defined when p(0) != 0")
    rev = p.reversed()
    return rev == p or rev == -p


def _stats(p: IntPoly) -> Tuple[int, int, int]:
    d = p.degree
    tr = -p.coeff(d - 1)
    norm = (-1) ** d * p.coeff(0)
    rtr = (-1) ** (d - 1) * p.coeff(1)
    return tr, norm, rtr


def trace_stats(n: int) -> Tuple[int, int, int]:
    """(trace, norm, norm * sum of reciprocal roots) of 2cos(2*pi/n)."""
    if n < 3:
        raise DegreeError("trace statistics are used for n >= 3")
    return _stats(psi(n))


def trace_stats_even(n: int) -> Tuple[int, int, int]:
    """The same statistics for g, where Psi_n(x) = g(x^2) and 4 | n."""
    if n % 4 or n < 8:
        raise DegreeError("Psi_n(x) = g(x^2) needs 4 | n and n >= 8")
    p = psi(n)
    g = Poly(p.coeffs[::2])
    if any(p.coeffs[1::2]):
        raise ArithmeticError(f"Psi_{n} has an odd-degree term")
    return _stats(g)


# -----------------------------
# |Psi_n(1)| < 2^d via Phi_n(zeta_6)
# -----------------------------
def _reduce_at_zeta6(p: IntPoly) -> EisensteinValue:
    acc = EisensteinValue(0, 0)
    sums = [0] * 6
    for i, c in enumerate(p.coeffs):
        sums[i % 6] += c
    for r, s in enumerate(sums):
        if s:
            acc = acc + EisensteinValue.zeta_power(r) * s
    return acc


def _product_at_zeta6(n: int) -> EisensteinValue:
    if n == 6:
        return EisensteinValue(0, 0)
    zeta_inv = EisensteinValue.zeta_power(5)
    num, den = ONE, ONE
    for d in divisors(n):
        mu = mobius(n // d)
        if mu == 0:
            continue
        if d % 6:
            f = EisensteinValue.zeta_power(d) - ONE
        else:
            # x^d - 1 vanishes at zeta; after cancelling (x - zeta) it leaves d * zeta^(d-1)
            f = zeta_inv * d
        if mu == 1:
            num = num * f
        else:
            den = den * f
    return num.exact_div(den)


def eval_cyclotomic_at_zeta6(n: int, method: Literal["product", "reduce"] = "product") -> EisensteinValue:
    """Phi_n(exp(pi*i/3)) as a + b*zeta."""
    if n < 1:
        raise DegreeError("n must be positive")
    if method == "reduce":
        return _reduce_at_zeta6(cyclotomic(n))
    if method == "product":
        return _product_at_zeta6(n)
    raise ValueError(f"unknown method {method!r}")


def psi_one_bound_holds(n: int) -> bool:
    """|Psi_n(1)| < 2^deg, i.e. norm(Phi_n(zeta_6)) < 4^(phi(n)/2)."""
    if n < 3:
        raise DegreeError("the bound is stated for n >= 3")
    value = eval_cyclotomic_at_zeta6(n)
    return value.norm < (1 << phi(n))


def psi_one_record(n: int) -> Dict[str, int]:
    value = eval_cyclotomic_at_zeta6(n)
    return {"n": n, "a": value.a, "b": value.b, "norm": value.norm, "bound": 1 << phi(n)}
