from __future__ import annotations

import os
from dataclasses import dataclass, replace
from functools import lru_cache
from typing import Any, Optional

from dotenv import load_dotenv

load_dotenv()

BASE_DIR = os.path.dirname(os.path.abspath(__file__))


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        return int(raw)
    except ValueError:
        return default


def _env_float(name: str, default: float) -> float:
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        return float(raw)
    except ValueError:
        return default


@dataclass(frozen=True)
class Settings:
    precision: int = 192
    denom_bound: int = 10**6
    tol: float = 1e-8
    jobs: int = 1
    log_level: str = "INFO"
    data_dir: str = os.path.join(BASE_DIR, "data")

    def __post_init__(self):
        if self.precision < 53:
            raise ValueError("precision must be at least 53 bits")
        if self.denom_bound < 1:
            raise ValueError("denom_bound must be positive")
        if not (0.0 < self.tol < 1.0):
            raise ValueError("tol must lie in (0, 1)")
        if self.jobs < 1:
            raise ValueError("jobs must be positive")

    @classmethod
    def from_env(cls) -> "Settings":
        return cls(
            precision=_env_int("TRIGFORMS_PRECISION", 192),
            denom_bound=_env_int("TRIGFORMS_DENOM_BOUND", 10**6),
            tol=_env_float("TRIGFORMS_TOL", 1e-8),
            jobs=max(1, _env_int("TRIGFORMS_JOBS", os.cpu_count() or 1)),
            log_level=os.getenv("TRIGFORMS_LOG_LEVEL", "INFO").upper(),
            data_dir=os.getenv("TRIGFORMS_DATA_DIR", os.path.join(BASE_DIR, "data")),
        )

    def with_overrides(self, **flags: Optional[Any]) -> "Settings":
        """Apply CLI flags; ``None`` means the flag was not given."""
        changes = {k: v for k, v in flags.items() if v is not None}
        return replace(self, **changes) if changes else self


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    return Settings.from_env()
