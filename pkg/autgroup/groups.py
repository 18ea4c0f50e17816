"""Finite subgroups of GL2(Q): closure, classification, conjugation."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from algebra.matrix import MAX_FINITE_ORDER, Mat2Q
from errors import GroupClosureError, SingularMatrixError

logger = logging.getLogger(__name__)

DEFAULT_CLOSURE_CAP = 48


class GroupClass(str, Enum):
    C1 = "C1"
    C2 = "C2"
    C3 = "C3"
    C4 = "C4"
    C6 = "C6"
    D1 = "D1"
    D2 = "D2"
    D3 = "D3"
    D4 = "D4"
    D6 = "D6"

    @property
    def order(self) -> int:
        k = int(self.value[1])
        return k if self.value[0] == "C" else 2 * k

    @property
    def is_cyclic(self) -> bool:
        return self.value[0] == "C"


@dataclass(frozen=True)
class MatrixGroup:
    elements: FrozenSet[Mat2Q]
    generators: Tuple[Mat2Q, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if Mat2Q.identity() not in self.elements:
            raise GroupClosureError("a group must contain the identity")

    @classmethod
    def trivial(cls) -> "MatrixGroup":
        return cls(frozenset({Mat2Q.identity()}))

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, m: Mat2Q) -> bool:
        return m in self.elements

    def __iter__(self):
        return iter(self.sorted())

    def __len__(self) -> int:
        return len(self.elements)

    def sorted(self) -> List[Mat2Q]:
        return sorted(self.elements, key=Mat2Q.sort_key)

    @property
    def is_integral(self) -> bool:
        return all(m.is_integral for m in self.elements)

    def is_subgroup_of(self, other: "MatrixGroup") -> bool:
        return self.elements <= other.elements

    def element_orders(self) -> Dict[Mat2Q, int]:
        out = {}
        for m in self.elements:
            k = m.order(MAX_FINITE_ORDER)
            if k is None:
                raise GroupClosureError(f"{m} has no finite order <= {MAX_FINITE_ORDER}")
            out[m] = k
        return out

    def to_json(self) -> Dict[str, Any]:
        return {
            "order": self.order,
            "class": classify_group(self).value,
            "generators": [g.to_json() for g in (self.generators or minimal_generators(self))],
            "elements": [m.to_json() for m in self.sorted()],
        }

    def __str__(self) -> str:
        gens = self.generators or minimal_generators(self)
        return "<" + ", ".join(str(g) for g in gens) + ">" if gens else "{I}"


def group_closure(generators: Iterable[Mat2Q], cap: int = DEFAULT_CLOSURE_CAP) -> MatrixGroup:
    """The group generated by ``generators``; fails once it outgrows ``cap``."""
    gens = tuple(generators)
    for g in gens:
        if g.det == 0:
            raise SingularMatrixError(f"generator {g} is singular")
    elements = {Mat2Q.identity()}
    frontier = [Mat2Q.identity()]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = a @ g
                if b not in elements:
                    elements.add(b)
                    nxt.append(b)
                    if len(elements) > cap:
                        raise GroupClosureError(
                            f"closure of {len(gens)} generators exceeds {cap} elements; the group is not finite"
                        )
        frontier = nxt
    # finite closure under products is already closed under inverses
    return MatrixGroup(frozenset(elements), gens)


def minimal_generators(group: MatrixGroup) -> Tuple[Mat2Q, ...]:
    """A short generating set, picked greedily from elements of largest order."""
    orders = group.element_orders()
    ranked = sorted((m for m in group.elements if not m.is_identity), key=lambda m: (-orders[m], m.sort_key()))
    chosen: List[Mat2Q] = []
    span = {Mat2Q.identity()}
    for m in ranked:
        if m in span:
            continue
        chosen.append(m)
        span = set(group_closure(chosen).elements)
        if len(span) == group.order:
            break
    return tuple(chosen)


def classify_group(group: MatrixGroup) -> GroupClass:
    """Conjugacy class label from the order and the largest element order."""
    n = group.order
    orders = group.element_orders()
    top = max(orders.values())
    if n == 1:
        return GroupClass.C1
    if n == 2:
        (m,) = [m for m in group.elements if not m.is_identity]
        return GroupClass.C2 if m == -Mat2Q.identity() else GroupClass.D1
    if n == 3:
        return GroupClass.C3
    if n == 4:
        return GroupClass.C4 if top == 4 else GroupClass.D2
    if n == 6:
        return GroupClass.C6 if top == 6 else GroupClass.D3
    if n == 8:
        return GroupClass.D4
    if n == 12:
        return GroupClass.D6
    raise GroupClosureError(f"no finite subgroup of GL2(Q) has order {n}")


def conjugate_group(group: MatrixGroup, by: Mat2Q) -> MatrixGroup:
    """by^-1 G by."""
    return MatrixGroup(
        frozenset(m.conjugate(by) for m in group.elements),
        tuple(g.conjugate(by) for g in group.generators),
    )


def group_from_json(obj: Sequence[Any]) -> MatrixGroup:
    return group_closure([Mat2Q.from_json(g) for g in obj])


def _m(*rows: Sequence[int]) -> Mat2Q:
    (s, u), (t, v) = rows
    return Mat2Q.of(s, u, t, v)


CLASS_REPRESENTATIVES: Dict[GroupClass, Tuple[Mat2Q, ...]] = {
    GroupClass.C1: (_m((1, 0), (0, 1)),),
    GroupClass.C2: (_m((-1, 0), (0, -1)),),
    GroupClass.C3: (_m((0, 1), (-1, -1)),),
    GroupClass.C4: (_m((0, 1), (-1, 0)),),
    GroupClass.C6: (_m((0, -1), (1, 1)),),
    GroupClass.D1: (_m((0, 1), (1, 0)),),
    GroupClass.D2: (_m((0, 1), (1, 0)), _m((-1, 0), (0, -1))),
    GroupClass.D3: (_m((0, 1), (1, 0)), _m((0, 1), (-1, -1))),
    GroupClass.D4: (_m((0, 1), (1, 0)), _m((0, 1), (-1, 0))),
    GroupClass.D6: (_m((0, 1), (1, 0)), _m((0, 1), (-1, 1))),
}


def representative(label: GroupClass) -> MatrixGroup:
    return group_closure(CLASS_REPRESENTATIVES[label])


@dataclass(frozen=True)
class AutResult:
    """Aut F and Aut|F| for one form, with the method that produced them."""

    aut: MatrixGroup
    aut_abs: MatrixGroup
    method: str = "search"
    form: Optional[Any] = field(default=None, compare=False)

    def __post_init__(self):
        if not self.aut.is_subgroup_of(self.aut_abs):
            raise GroupClosureError("Aut F must lie inside Aut|F|")
        if self.aut_abs.order % self.aut.order or self.aut_abs.order // self.aut.order not in (1, 2):
            raise GroupClosureError(
                f"|Aut|F|| / |Aut F| = {self.aut_abs.order}/{self.aut.order} is not 1 or 2"
            )

    @property
    def classes(self) -> Tuple[GroupClass, GroupClass]:
        return classify_group(self.aut), classify_group(self.aut_abs)

    @property
    def index(self) -> int:
        return self.aut_abs.order // self.aut.order

    def same_groups(self, other: "AutResult") -> bool:
        return self.aut.elements == other.aut.elements and self.aut_abs.elements == other.aut_abs.elements

    def to_json(self) -> Dict[str, Any]:
        cls, abs_cls = self.classes
        out: Dict[str, Any] = {
            "method": self.method,
            "class": cls.value,
            "abs_class": abs_cls.value,
            "order": self.aut.order,
            "abs_order": self.aut_abs.order,
            "generators": [g.to_json() for g in minimal_generators(self.aut)],
            "abs_generators": [g.to_json() for g in minimal_generators(self.aut_abs)],
            "elements": [m.to_json() for m in self.aut.sorted()],
            "abs_elements": [m.to_json() for m in self.aut_abs.sorted()],
        }
        if self.form is not None:
            out["form"] = self.form.to_json()
        return out
