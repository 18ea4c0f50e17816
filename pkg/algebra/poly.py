"""Dense univariate polynomials with exact integer or rational coefficients.

Coefficients are stored in ascending order: ``coeffs[i]`` multiplies ``x**i``.
Integral coefficients are kept as ``int`` so that integer polynomials stay
in fast integer arithmetic; anything else is a ``Fraction``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Any, Iterable, List, Sequence, Tuple, Union

from errors import InexactDivisionError

Scalar = Union[int, Fraction]


def as_exact(c: Any) -> Scalar:
    """Reduce a coefficient to ``int`` when integral, ``Fraction`` otherwise."""
    if isinstance(c, bool):
        return int(c)
    if isinstance(c, int):
        return c
    q = Fraction(c)
    return q.numerator if q.denominator == 1 else q


def _trim(coeffs: Iterable[Any]) -> Tuple[Scalar, ...]:
    out = [as_exact(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class Poly:
    coeffs: Tuple[Scalar, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    # ---- constructors ----
    @classmethod
    def zero(cls) -> "Poly":
        return cls(())

    @classmethod
    def one(cls) -> "Poly":
        return cls((1,))

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def monomial(cls, k: int, c: Scalar = 1) -> "Poly":
        return cls((0,) * k + (c,))

    @classmethod
    def from_descending(cls, coeffs: Sequence[Scalar]) -> "Poly":
        return cls(tuple(reversed(list(coeffs))))

    # ---- queries ----
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Scalar:
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def is_monic(self) -> bool:
        return self.leading == 1

    @property
    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def coeff(self, i: int) -> Scalar:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    # ---- ring operations ----
    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs))

    def __add__(self, other: Any) -> "Poly":
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(tuple(self.coeff(i) + other.coeff(i) for i in range(n)))

    __radd__ = __add__

    def __sub__(self, other: Any) -> "Poly":
        return self + (-_coerce(other))

    def __rsub__(self, other: Any) -> "Poly":
        return _coerce(other) - self

    def __mul__(self, other: Any) -> "Poly":
        if not isinstance(other, Poly):
            c = as_exact(other)
            return Poly(tuple(c * a for a in self.coeffs))
        if self.is_zero or other.is_zero:
            return Poly.zero()
        out: List[Scalar] = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative power")
        result, base = Poly.one(), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> "Poly":
        """Multiply by ``x**k``."""
        return Poly((0,) * k + self.coeffs) if self.coeffs else self

    def divmod(self, other: "Poly") -> Tuple["Poly", "Poly"]:
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lead = other.leading
        if self.degree < dq:
            return Poly.zero(), self
        quot: List[Scalar] = [0] * (self.degree - dq + 1)
        for k in range(self.degree - dq, -1, -1):
            top = rem[k + dq]
            if top == 0:
                continue
            if lead == 1:
                q = top
            elif isinstance(top, int) and isinstance(lead, int) and top % lead == 0:
                q = top // lead
            else:
                q = as_exact(Fraction(top) / Fraction(lead))
            quot[k] = q
            for j, b in enumerate(other.coeffs):
                if b:
                    rem[k + j] -= q * b
        return Poly(quot), Poly(rem[:dq])

    def __floordiv__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[1]

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = self.divmod(other)
        if not r.is_zero:
            raise InexactDivisionError(f"({self}) is not divisible by ({other})")
        return q

    # ---- content ----
    def content(self) -> Scalar:
        """Positive content; for rational polynomials gcd(numerators)/lcm(denominators)."""
        if self.is_zero:
            return 0
        num, den = 0, 1
        for c in self.coeffs:
            q = Fraction(c)
            num = gcd(num, q.numerator)
            den = den * q.denominator // gcd(den, q.denominator)
        return as_exact(Fraction(num, den))

    def primitive_part(self) -> "Poly":
        if self.is_zero:
            return self
        c = Fraction(self.content())
        return Poly(tuple(Fraction(a) / c for a in self.coeffs))

    def monic(self) -> "Poly":
        lead = Fraction(self.leading)
        return Poly(tuple(Fraction(a) / lead for a in self.coeffs))

    # ---- calculus and composition ----
    def __call__(self, x: Any) -> Any:
        acc: Any = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Poly":
        return Poly(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def compose(self, inner: "Poly") -> "Poly":
        acc = Poly.zero()
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def reversed(self) -> "Poly":
        """``x**deg * p(1/x)``."""
        return Poly(tuple(reversed(self.coeffs)))

    def gcd(self, other: "Poly") -> "Poly":
        """Monic gcd over the rationals (zero if both are zero)."""
        a, b = self, other
        while not b.is_zero:
            a, b = b, a % b
        return a.monic() if not a.is_zero else a

    def squarefree_decomposition(self) -> List[Tuple["Poly", int]]:
        """Yun's algorithm: ``self = lc * prod(f_i ** i)`` with squarefree, pairwise coprime f_i."""
        if self.degree < 1:
            return []
        out: List[Tuple[Poly, int]] = []
        a = self.monic()
        b = a.derivative()
        c = a.gcd(b)
        w = a.exact_div(c)
        y = b.exact_div(c)
        i = 1
        while w.degree > 0:
            z = y - w.derivative()
            g = w.gcd(z)
            if g.degree > 0:
                out.append((g, i))
            w = w.exact_div(g)
            y = z.exact_div(g)
            i += 1
        return out

    # ---- presentation ----
    def to_json(self) -> List[str]:
        return [str(c) for c in self.coeffs]

    def __str__(self) -> str:
        return format_terms(list(enumerate(self.coeffs))[::-1], lambda i: _xpow("x", i))

    def __repr__(self) -> str:
        return f"Poly({self})"


IntPoly = Poly
RatPoly = Poly


def _coerce(obj: Any) -> Poly:
    return obj if isinstance(obj, Poly) else Poly((obj,))


def _xpow(var: str, k: int) -> str:
    if k == 0:
        return ""
    return var if k == 1 else f"{var}^{k}"


def format_terms(terms, monomial) -> str:
    """Render ``(key, coeff)`` pairs as ``a*m1 - b*m2 + ...``."""
    parts: List[str] = []
    for key, c in terms:
        if c == 0:
            continue
        mono = monomial(key)
        mag = abs(c)
        if mono:
            body = mono if mag == 1 else f"{mag}*{mono}"
        else:
            body = str(mag)
        if not parts:
            parts.append(f"-{body}" if c < 0 else body)
        else:
            parts.append(f"- {body}" if c < 0 else f"+ {body}")
    return " ".join(parts) if parts else "0"


def resultant(p: Poly, q: Poly) -> Scalar:
    """Res(p, q) by the Euclidean remainder sequence over the rationals."""
    if p.is_zero or q.is_zero:
        return 0
    acc: Fraction = Fraction(1)
    a, b = p, q
    while True:
        m, n = a.degree, b.degree
        if n == 0:
            return as_exact(acc * Fraction(b.leading) ** m)
        if m == 0:
            return as_exact(acc * Fraction(a.leading) ** n)
        r = a % b
        if r.is_zero:
            return 0
        if (m * n) % 2:
            acc = -acc
        acc *= Fraction(b.leading) ** (m - r.degree)
        a, b = b, r


def poly_discriminant(p: Poly) -> Scalar:
    d = p.degree
    if d < 1:
        raise ValueError("discriminant needs degree >= 1")
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    return as_exact(sign * Fraction(resultant(p, p.derivative())) / Fraction(p.leading))
