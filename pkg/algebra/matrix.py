from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, List, Optional, Tuple

from errors import SingularMatrixError
from utils.json_io import format_rational, parse_rational

MAX_FINITE_ORDER = 12


@dataclass(frozen=True)
class Mat2Q:
    """The rational matrix (s u; t v), acting by (x, y) -> (s*x + u*y, t*x + v*y)."""

    s: Fraction
    u: Fraction
    t: Fraction
    v: Fraction

    def __post_init__(self):
        for name in ("s", "u", "t", "v"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    @classmethod
    def of(cls, s: Any, u: Any, t: Any, v: Any) -> "Mat2Q":
        return cls(Fraction(s), Fraction(u), Fraction(t), Fraction(v))

    @classmethod
    def identity(cls) -> "Mat2Q":
        return cls.of(1, 0, 0, 1)

    @classmethod
    def scalar(cls, c: Any) -> "Mat2Q":
        return cls.of(c, 0, 0, c)

    @classmethod
    def diag(cls, a: Any, b: Any) -> "Mat2Q":
        return cls.of(a, 0, 0, b)

    @property
    def entries(self) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.s, self.u, self.t, self.v)

    @property
    def det(self) -> Fraction:
        return self.s * self.v - self.u * self.t

    @property
    def trace(self) -> Fraction:
        return self.s + self.v

    @property
    def is_integral(self) -> bool:
        return all(e.denominator == 1 for e in self.entries)

    @property
    def is_identity(self) -> bool:
        return self.entries == (1, 0, 0, 1)

    def __matmul__(self, other: "Mat2Q") -> "Mat2Q":
        return Mat2Q(
            self.s * other.s + self.u * other.t,
            self.s * other.u + self.u * other.v,
            self.t * other.s + self.v * other.t,
            self.t * other.u + self.v * other.v,
        )

    def __mul__(self, c: Any) -> "Mat2Q":
        c = Fraction(c)
        return Mat2Q(self.s * c, self.u * c, self.t * c, self.v * c)

    __rmul__ = __mul__

    def __truediv__(self, c: Any) -> "Mat2Q":
        return self * (1 / Fraction(c))

    def __neg__(self) -> "Mat2Q":
        return self * -1

    def inverse(self) -> "Mat2Q":
        det = self.det
        if det == 0:
            raise SingularMatrixError(f"{self} is singular")
        return Mat2Q(self.v / det, -self.u / det, -self.t / det, self.s / det)

    def __pow__(self, k: int) -> "Mat2Q":
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        out = Mat2Q.identity()
        while k:
            if k & 1:
                out = out @ base
            base = base @ base
            k >>= 1
        return out

    def order(self, limit: int = MAX_FINITE_ORDER) -> Optional[int]:
        """Multiplicative order if it is at most ``limit``, else ``None``."""
        if self.det == 0:
            raise SingularMatrixError(f"{self} is singular")
        acc = self
        for k in range(1, limit + 1):
            if acc.is_identity:
                return k
            acc = acc @ self
        return None

    def conjugate(self, by: "Mat2Q") -> "Mat2Q":
        """by^{-1} @ self @ by."""
        return by.inverse() @ self @ by

    def sort_key(self) -> Tuple[Fraction, ...]:
        return self.entries

    # ---- codec ----
    def to_json(self) -> List[str]:
        return [format_rational(e) for e in self.entries]

    @classmethod
    def from_json(cls, obj: Any) -> "Mat2Q":
        if isinstance(obj, dict):
            obj = [obj[k] for k in ("s", "u", "t", "v")]
        if len(obj) == 2 and all(isinstance(r, (list, tuple)) for r in obj):
            obj = [obj[0][0], obj[0][1], obj[1][0], obj[1][1]]
        if len(obj) != 4:
            raise ValueError("a 2x2 matrix needs four entries")
        return cls(*(parse_rational(e) for e in obj))

    def __str__(self) -> str:
        s, u, t, v = (format_rational(e) for e in self.entries)
        return f"({s} {u}; {t} {v})"

    def __repr__(self) -> str:
        return f"Mat2Q{self}"
