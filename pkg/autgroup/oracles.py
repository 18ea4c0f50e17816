"""Claimed automorphism groups and weights of Psi_n, Pi_n, T_n and U_n.

Exceptional rows live in ``data/aut_tables.json``; the generic cases follow
the parity and congruence rules below. Groups are compared as element sets,
so generator choices never matter.
"""
from __future__ import annotations

import logging
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, Dict, Literal, Optional, Tuple

from algebra.matrix import Mat2Q
from autgroup.groups import AutResult, GroupClass, MatrixGroup, classify_group, group_closure
from errors import OutOfScopeError
from families.trig_minpoly import phi, pi_degree
from settings import get_settings
from utils.json_io import load_json

logger = logging.getLogger(__name__)

Family = Literal["psi", "pi", "T", "U"]
FAMILIES: Tuple[str, ...] = ("psi", "pi", "T", "U")

PSI_EXCLUDED = frozenset({1, 2, 3, 4, 5, 6, 8, 10, 12})
PI_EXCLUDED = frozenset({1, 2, 3, 4, 6, 8, 12, 20})

_I = Mat2Q.identity()
_FLIP_X = Mat2Q.diag(-1, 1)
_FLIP_Y = Mat2Q.diag(1, -1)

PLUS_MINUS_I = group_closure([-_I])
D2_DIAGONAL = group_closure([_FLIP_X, _FLIP_Y])
Y_REFLECTION = group_closure([_FLIP_Y])


@dataclass(frozen=True)
class ExpectedAut:
    family: str
    n: int
    aut: MatrixGroup
    aut_abs: MatrixGroup
    printed_labels: Tuple[str, str]
    rule: str

    @property
    def classes(self) -> Tuple[GroupClass, GroupClass]:
        return classify_group(self.aut), classify_group(self.aut_abs)

    def matches(self, result: AutResult) -> bool:
        return result.aut.elements == self.aut.elements and result.aut_abs.elements == self.aut_abs.elements

    def to_json(self) -> Dict[str, Any]:
        cls, abs_cls = self.classes
        return {
            "family": self.family,
            "n": self.n,
            "rule": self.rule,
            "printed": list(self.printed_labels),
            "class": cls.value,
            "abs_class": abs_cls.value,
            "elements": [m.to_json() for m in self.aut.sorted()],
            "abs_elements": [m.to_json() for m in self.aut_abs.sorted()],
        }


@lru_cache(maxsize=4)
def _tables(data_dir: str) -> Dict[str, Any]:
    path = os.path.join(data_dir, "aut_tables.json")
    logger.debug("Loading automorphism tables from %s", path)
    return load_json(path)


def _table_row(family: str, n: int) -> Optional[ExpectedAut]:
    row = _tables(get_settings().data_dir).get(family, {}).get(str(n))
    if row is None:
        return None
    return ExpectedAut(
        family=family,
        n=n,
        aut=group_closure(Mat2Q.from_json(g) for g in row["aut"]),
        aut_abs=group_closure(Mat2Q.from_json(g) for g in row["aut_abs"]),
        printed_labels=tuple(row["printed"]),  # type: ignore[arg-type]
        rule="table",
    )


def in_scope(family: str, n: int) -> bool:
    if family == "psi":
        return n >= 1 and n not in PSI_EXCLUDED
    if family == "pi":
        return n >= 1 and n not in PI_EXCLUDED
    if family in ("T", "U"):
        return n >= 3
    raise OutOfScopeError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")


def _require_scope(family: str, n: int) -> None:
    if not in_scope(family, n):
        raise OutOfScopeError(f"{family}_{n} lies outside the range the automorphism statements cover")


def expected_aut(family: Family, n: int) -> ExpectedAut:
    _require_scope(family, n)

    if family in ("psi", "pi"):
        row = _table_row(family, n)
        if row is not None:
            return row

    if family == "psi":
        d = phi(n) // 2
        if n % 4 == 0:
            return ExpectedAut(family, n, D2_DIAGONAL, D2_DIAGONAL, ("D2", "D2"), "n = 0 mod 4")
        if d % 2:
            return ExpectedAut(family, n, MatrixGroup.trivial(), PLUS_MINUS_I, ("C1", "C2"), "d odd")
        return ExpectedAut(family, n, PLUS_MINUS_I, PLUS_MINUS_I, ("C2", "C2"), "d even, n != 0 mod 4")

    if family == "pi":
        if n % 8 == 4:
            if pi_degree(n) % 2:
                return ExpectedAut(family, n, MatrixGroup.trivial(), PLUS_MINUS_I, ("C1", "C2"), "n = 4 mod 8, d odd")
            return ExpectedAut(family, n, PLUS_MINUS_I, PLUS_MINUS_I, ("C2", "C2"), "n = 4 mod 8, d even")
        return ExpectedAut(family, n, D2_DIAGONAL, D2_DIAGONAL, ("D2", "D2"), "n != 4 mod 8")

    # T_n, U_n are odd in x for odd n, so x -> -x flips the sign and y -> -y fixes them
    if n % 2:
        return ExpectedAut(family, n, Y_REFLECTION, D2_DIAGONAL, ("C2", "D2"), "n odd")
    return ExpectedAut(family, n, D2_DIAGONAL, D2_DIAGONAL, ("D2", "D2"), "n even")


def w_expected(family: Family, n: int) -> Fraction:
    """The weight W = 1/|Aut F| case by case."""
    _require_scope(family, n)
    if family == "psi":
        if n in (7, 9, 14, 18):
            return Fraction(1, 3)
        if n in (15, 30):
            return Fraction(1, 4)
        if n == 24:
            return Fraction(1, 8)
        if n % 4 == 0:
            return Fraction(1, 4)
        return Fraction(1) if (phi(n) // 2) % 2 else Fraction(1, 2)
    if family == "pi":
        if n in (28, 36):
            return Fraction(1, 3)
        if n == 60:
            return Fraction(1, 4)
        if n == 24:
            return Fraction(1, 8)
        if n % 8 != 4:
            return Fraction(1, 4)
        return Fraction(1) if pi_degree(n) % 2 else Fraction(1, 2)
    return Fraction(1, 2) if n % 2 else Fraction(1, 4)


def area_limit(family: Family) -> Fraction:
    """lim A as n grows: 16/3 for Psi and Pi, 8/3 for T and U."""
    return Fraction(16, 3) if family in ("psi", "pi") else Fraction(8, 3)
