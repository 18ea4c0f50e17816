"""Turn a command-line form argument into a BinaryForm.

Accepted sources, tried in this order:
  - builder syntax ``family:n`` (psi, pi, T, U, vtilde, utilde);
  - inline JSON: a coefficient list ``[1, 0, -3, 0]`` or ``{"coeffs": [...]}``;
  - a path to a file holding either JSON shape.

Builders also carry the closed-form roots of the form and, for Psi and Pi,
the Galois action on them.
"""
from __future__ import annotations

import logging
import os
import re
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional

import orjson

from algebra.binary_form import BinaryForm
from algebra.roots import ProjRoot
from errors import FormSourceError
from families.chebyshev import chebyshev_roots, t_form, tilde_roots, u_form, u_tilde, v_tilde
from families.trig_minpoly import pi_form, pi_galois, pi_roots, psi_form, psi_galois, psi_roots
from utils.fuzzy_search import suggest
from utils.json_io import parse_rational

logger = logging.getLogger(__name__)

_BUILDER = re.compile(r"^\s*([A-Za-z_]+)\s*:\s*(-?\d+)\s*$")


@dataclass(frozen=True)
class FormSource:
    form: BinaryForm
    label: str
    family: Optional[str] = None
    n: Optional[int] = None
    roots: Optional[List[ProjRoot]] = field(default=None, repr=False, compare=False)
    galois: Optional[List[List[int]]] = field(default=None, repr=False, compare=False)


def _psi(n: int, precision: int) -> FormSource:
    return FormSource(psi_form(n), f"psi:{n}", "psi", n, psi_roots(n, precision), psi_galois(n))


def _pi(n: int, precision: int) -> FormSource:
    return FormSource(pi_form(n), f"pi:{n}", "pi", n, pi_roots(n, precision), pi_galois(n))


def _t(n: int, precision: int) -> FormSource:
    return FormSource(t_form(n), f"T:{n}", "T", n, chebyshev_roots("T", n, precision))


def _u(n: int, precision: int) -> FormSource:
    return FormSource(u_form(n), f"U:{n}", "U", n, chebyshev_roots("U", n, precision))


def _vtilde(n: int, precision: int) -> FormSource:
    return FormSource(v_tilde(n), f"vtilde:{n}", None, n, tilde_roots("vtilde", n, precision))


def _utilde(n: int, precision: int) -> FormSource:
    form = u_tilde(n)
    roots = tilde_roots("utilde", n, precision) if n >= 2 else None
    return FormSource(form, f"utilde:{n}", None, n, roots)


BUILDERS: Dict[str, Callable[[int, int], FormSource]] = {
    "psi": _psi,
    "pi": _pi,
    "T": _t,
    "U": _u,
    "vtilde": _vtilde,
    "utilde": _utilde,
}
_ALIASES = {name.lower(): name for name in BUILDERS}


def build(family: str, n: int, precision: int = 192) -> FormSource:
    name = _ALIASES.get(family.lower())
    if name is None:
        raise FormSourceError(f"unknown form family {family!r}", suggest(family, BUILDERS))
    if n < 1:
        raise FormSourceError(f"{name}:{n}: the index must be positive")
    return BUILDERS[name](n, precision)


def _from_json_value(obj: Any, label: str) -> FormSource:
    try:
        if isinstance(obj, list):
            if not obj:
                raise ValueError("empty coefficient list")
            form = BinaryForm.of(*(parse_rational(c) for c in obj))
        elif isinstance(obj, dict):
            form = BinaryForm.from_json(obj)
        else:
            raise ValueError(f"expected a list or an object, got {type(obj).__name__}")
    except (ValueError, ZeroDivisionError) as e:
        raise FormSourceError(f"{label}: {e}") from e
    return FormSource(form, label)


def parse_form_source(text: str, precision: int = 192) -> FormSource:
    """Resolve one form argument; raises FormSourceError when nothing fits."""
    text = text.strip()
    m = _BUILDER.match(text)
    if m and not os.path.exists(text):
        family, n = m.group(1), int(m.group(2))
        logger.debug("form source %r: builder %s(%d)", text, family, n)
        return build(family, n, precision)

    if text[:1] in ("[", "{"):
        try:
            obj = orjson.loads(text)
        except orjson.JSONDecodeError as e:
            raise FormSourceError(f"inline JSON does not parse: {e}") from e
        return _from_json_value(obj, "inline JSON")

    if os.path.isfile(text):
        try:
            with open(text, "rb") as f:
                obj = orjson.loads(f.read())
        except orjson.JSONDecodeError as e:
            raise FormSourceError(f"{text}: not valid JSON: {e}") from e
        return _from_json_value(obj, text)

    raise FormSourceError(
        f"cannot read a form from {text!r}; use family:n, a JSON coefficient list or a file path",
        suggest(text.split(":")[0], BUILDERS),
    )
