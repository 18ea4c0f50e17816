from __future__ import annotations

import os
from fractions import Fraction
from typing import Any

import orjson

_PRETTY = orjson.OPT_INDENT_2 | orjson.OPT_SORT_KEYS | orjson.OPT_APPEND_NEWLINE
_COMPACT = orjson.OPT_SORT_KEYS


def format_rational(q: Fraction | int) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_rational(text: Any) -> Fraction:
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    if isinstance(text, str):
        return Fraction(text.strip())
    raise ValueError(f"not an exact rational: {text!r}")


def _default(obj: Any) -> Any:
    if isinstance(obj, Fraction):
        return format_rational(obj)
    if hasattr(obj, "to_json"):
        return obj.to_json()
    if isinstance(obj, (set, frozenset)):
        return sorted(obj, key=repr)
    # mpmath numbers and anything float-like
    try:
        return float(obj)
    except (TypeError, ValueError):
        pass
    raise TypeError(f"cannot encode {type(obj).__name__}")


def dumps(obj: Any, *, pretty: bool = True) -> bytes:
    return orjson.dumps(obj, default=_default, option=_PRETTY if pretty else _COMPACT)


def loads(data: bytes | str) -> Any:
    return orjson.loads(data)


def load_json(path: str, default: Any = None) -> Any:
    if default is not None and not os.path.exists(path):
        return default
    with open(path, "rb") as f:
        return orjson.loads(f.read())


def save_json(path: str, obj: Any) -> None:
    """Write ``obj`` through a temp file so readers never see a partial file."""
    folder = os.path.dirname(path)
    if folder:
        os.makedirs(folder, exist_ok=True)
    tmp = path + ".tmp"
    with open(tmp, "wb") as f:
        f.write(dumps(obj))
    os.replace(tmp, path)
