"""stdout writers. Logs go to stderr; only results are printed here."""
from __future__ import annotations

import sys
from typing import Any, Iterable

from utils.json_io import dumps


def emit_json(obj: Any) -> None:
    sys.stdout.buffer.write(dumps(obj))
    sys.stdout.flush()


def emit_json_line(obj: Any) -> None:
    sys.stdout.buffer.write(dumps(obj, pretty=False) + b"\n")
    sys.stdout.flush()


def emit_text(lines: Iterable[str] | str) -> None:
    if isinstance(lines, str):
        lines = [lines]
    for line in lines:
        print(line)


def emit(args, obj: Any, text: Iterable[str] | str) -> None:
    """JSON when --json was given, otherwise the human-readable lines."""
    if getattr(args, "json", False):
        emit_json(obj)
    else:
        emit_text(text)
