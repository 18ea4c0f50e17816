"""Exact arithmetic in Z[zeta], zeta = exp(pi*i/3), with zeta^2 = zeta - 1."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

from errors import InexactDivisionError


@dataclass(frozen=True)
class EisensteinValue:
    a: int
    b: int

    @classmethod
    def zeta_power(cls, k: int) -> "EisensteinValue":
        return _ZETA_POWERS[k % 6]

    @property
    def norm(self) -> int:
        """|a + b*zeta|^2."""
        return self.a * self.a + self.a * self.b + self.b * self.b

    def __add__(self, other: "EisensteinValue") -> "EisensteinValue":
        return EisensteinValue(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "EisensteinValue") -> "EisensteinValue":
        return EisensteinValue(self.a - other.a, self.b - other.b)

    def __mul__(self, other) -> "EisensteinValue":
        if isinstance(other, int):
            return EisensteinValue(self.a * other, self.b * other)
        a, b, c, d = self.a, self.b, other.a, other.b
        # (a + b z)(c + d z) = ac + (ad + bc) z + bd (z - 1)
        return EisensteinValue(a * c - b * d, a * d + b * c + b * d)

    __rmul__ = __mul__

    def conjugate(self) -> "EisensteinValue":
        # conj(zeta) = 1 - zeta
        return EisensteinValue(self.a + self.b, -self.b)

    def exact_div(self, other: "EisensteinValue") -> "EisensteinValue":
        n = other.norm
        if n == 0:
            raise ZeroDivisionError("division by zero in Z[zeta]")
        num = self * other.conjugate()
        if num.a % n or num.b % n:
            raise InexactDivisionError(f"{self} is not divisible by {other}")
        return EisensteinValue(num.a // n, num.b // n)

    def as_tuple(self) -> Tuple[int, int]:
        return (self.a, self.b)

    def __str__(self) -> str:
        return f"{self.a} + {self.b}*zeta6"


_ZETA_POWERS = (
    EisensteinValue(1, 0),
    EisensteinValue(0, 1),
    EisensteinValue(-1, 1),
    EisensteinValue(-1, 0),
    EisensteinValue(0, -1),
    EisensteinValue(1, -1),
)

ONE = _ZETA_POWERS[0]
