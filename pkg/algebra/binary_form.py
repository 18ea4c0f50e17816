from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from algebra.matrix import Mat2Q
from algebra.poly import Poly, Scalar, as_exact, format_terms, poly_discriminant
from errors import DegreeError, InexactDivisionError
from utils.json_io import format_rational, parse_rational


def _xy(d: int):
    def mono(i: int) -> str:
        xs = "" if d - i == 0 else ("x" if d - i == 1 else f"x^{d - i}")
        ys = "" if i == 0 else ("y" if i == 1 else f"y^{i}")
        return "*".join(p for p in (xs, ys) if p)
    return mono


@dataclass(frozen=True)
class BinaryForm:
    """F(x, y) = sum(c_i * x**(d-i) * y**i) for i in 0..d.

    Coefficients run in descending powers of x, so ``coeffs[0]`` is the x^d
    coefficient and ``coeffs[d]`` the y^d coefficient.
    """

    degree: int
    coeffs: Tuple[Scalar, ...]

    def __post_init__(self):
        if self.degree < 0:
            raise DegreeError("degree must be non-negative")
        coeffs = tuple(as_exact(c) for c in self.coeffs)
        if len(coeffs) != self.degree + 1:
            raise DegreeError(f"degree {self.degree} form needs {self.degree + 1} coefficients, got {len(coeffs)}")
        object.__setattr__(self, "coeffs", coeffs)

    # ---- constructors ----
    @classmethod
    def of(cls, *coeffs: Any) -> "BinaryForm":
        return cls(len(coeffs) - 1, tuple(coeffs))

    @classmethod
    def from_poly(cls, p: Poly, d: Optional[int] = None) -> "BinaryForm":
        if d is None:
            d = max(p.degree, 0)
        if p.degree > d:
            raise DegreeError(f"cannot homogenize degree {p.degree} polynomial to degree {d}")
        return cls(d, tuple(p.coeff(d - i) for i in range(d + 1)))

    # ---- queries ----
    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    @property
    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    @property
    def is_primitive_integral(self) -> bool:
        """Integer form with content 1."""
        return self.is_integral and not self.is_zero and self.content() == 1

    @property
    def infinity_multiplicity(self) -> int:
        """Multiplicity of the root [1:0], i.e. the power of y dividing F."""
        k = 0
        for c in self.coeffs:
            if c != 0:
                break
            k += 1
        return k

    def content(self) -> Scalar:
        return Poly(self.coeffs).content()

    def primitive_part(self) -> "BinaryForm":
        c = Fraction(self.content())
        if c == 0:
            return self
        return BinaryForm(self.degree, tuple(Fraction(a) / c for a in self.coeffs))

    def dehomogenize(self) -> Poly:
        """F(x, 1)."""
        return Poly(tuple(reversed(self.coeffs)))

    def __call__(self, x: Any, y: Any) -> Any:
        d = self.degree
        acc: Any = 0
        # Horner in x with y-powers folded in from the right
        ypow: Any = 1
        terms = []
        for i in range(d + 1):
            terms.append(self.coeffs[i] * ypow)
            ypow = ypow * y
        for t in terms:
            acc = acc * x + t
        return acc

    # ---- ring operations ----
    def __neg__(self) -> "BinaryForm":
        return BinaryForm(self.degree, tuple(-c for c in self.coeffs))

    def __add__(self, other: "BinaryForm") -> "BinaryForm":
        if other.degree != self.degree:
            raise DegreeError("cannot add forms of different degree")
        return BinaryForm(self.degree, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "BinaryForm") -> "BinaryForm":
        return self + (-other)

    def __mul__(self, other: Any) -> "BinaryForm":
        if isinstance(other, BinaryForm):
            prod = Poly(tuple(reversed(self.coeffs))) * Poly(tuple(reversed(other.coeffs)))
            return BinaryForm.from_poly(prod, self.degree + other.degree)
        c = as_exact(other)
        return BinaryForm(self.degree, tuple(c * a for a in self.coeffs))

    __rmul__ = __mul__

    def exact_div(self, other: "BinaryForm") -> "BinaryForm":
        if other.is_zero:
            raise ZeroDivisionError("division by the zero form")
        if other.degree > self.degree:
            raise InexactDivisionError("divisor has larger degree")
        # y-power factors vanish on dehomogenizing, so compare them separately
        if other.infinity_multiplicity > self.infinity_multiplicity:
            raise InexactDivisionError(f"({self}) is not divisible by ({other})")
        q = self.dehomogenize().exact_div(other.dehomogenize())
        return BinaryForm.from_poly(q, self.degree - other.degree)

    # ---- linear substitution ----
    def substitute(self, m: Mat2Q) -> "BinaryForm":
        """F_M(x, y) = F(s*x + u*y, t*x + v*y)."""
        d = self.degree
        s, u, t, v = (as_exact(e) for e in m.entries)
        left = Poly((u, s))
        right = Poly((v, t))
        lpow: List[Poly] = [Poly.one()]
        rpow: List[Poly] = [Poly.one()]
        for _ in range(d):
            lpow.append(lpow[-1] * left)
            rpow.append(rpow[-1] * right)
        total = Poly.zero()
        for i, c in enumerate(self.coeffs):
            if c:
                total = total + (lpow[d - i] * rpow[i]) * c
        return BinaryForm.from_poly(total, d)

    def swap(self) -> "BinaryForm":
        """F(y, x)."""
        return BinaryForm(self.degree, tuple(reversed(self.coeffs)))

    # ---- invariants ----
    def discriminant(self) -> Scalar:
        if self.degree < 2:
            raise DegreeError("discriminant needs degree >= 2")
        if self.is_zero:
            return 0
        form = self
        if self.coeffs[0] == 0:
            # unimodular shear (1 0; k 1) moves the x^d coefficient to F(1, k)
            k = 1
            while self(1, k) == 0:
                k += 1
            form = self.substitute(Mat2Q.of(1, 0, k, 1))
        return poly_discriminant(form.dehomogenize())

    def proportionality(self, other: "BinaryForm") -> Optional[Scalar]:
        """The c with other == c * self, or ``None``."""
        if other.degree != self.degree:
            raise DegreeError("proportionality needs forms of equal degree")
        ratio: Optional[Fraction] = None
        for a, b in zip(self.coeffs, other.coeffs):
            if a == 0:
                if b != 0:
                    return None
                continue
            r = Fraction(b) / Fraction(a)
            if ratio is None:
                ratio = r
            elif r != ratio:
                return None
        if ratio is None or ratio == 0:
            return None
        return as_exact(ratio)

    # ---- codec ----
    def to_json(self) -> Dict[str, Any]:
        return {"degree": self.degree, "coeffs": [format_rational(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj: Dict[str, Any]) -> "BinaryForm":
        try:
            coeffs = [parse_rational(c) for c in obj["coeffs"]]
            degree = int(obj.get("degree", len(coeffs) - 1))
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as e:
            raise ValueError(f"malformed form JSON: {e}") from e
        return cls(degree, tuple(coeffs))

    def __str__(self) -> str:
        return format_terms(list(enumerate(self.coeffs)), _xy(self.degree))

    def __repr__(self) -> str:
        return f"BinaryForm({self})"


def homogenize(p: Poly, d: int) -> BinaryForm:
    return BinaryForm.from_poly(p, d)


def dehomogenize(form: BinaryForm) -> Poly:
    return form.dehomogenize()


def substitute(form: BinaryForm, m: Mat2Q) -> BinaryForm:
    return form.substitute(m)


def discriminant(form: BinaryForm) -> Scalar:
    return form.discriminant()


def proportionality(form: BinaryForm, other: BinaryForm) -> Optional[Scalar]:
    return form.proportionality(other)


def form_product(factors: Sequence[BinaryForm]) -> BinaryForm:
    acc = BinaryForm(0, (1,))
    for f in factors:
        acc = acc * f
    return acc

