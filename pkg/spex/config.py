# config.py
# Purpose: Run configuration shared by every subcommand.
#          Precedence: built-in default < SPEX_* environment variable < command-line flag.

from __future__ import annotations
import os
from dataclasses import dataclass, fields, replace
from pathlib import Path
from typing import Any, Dict, Mapping, Optional

import psutil

from spex.enumeration import DEFAULT_EDGE_CAP
from spex.errors import InvalidParameter
from spex.spectral import DEFAULT_MAX_ITER, DEFAULT_TOL

OUTPUT_FORMATS = ("json", "csv", "text")

# environment variable -> (field, parser)
ENV_OVERRIDES = {
    "SPEX_TOLERANCE": ("tolerance", float),
    "SPEX_WORKERS": ("workers", int),
    "SPEX_SEED": ("seed", int),
    "SPEX_EDGE_CAP": ("edge_cap", int),
}


def default_workers() -> int:
    """Physical cores when psutil can tell, else logical CPUs, else 1."""
    return psutil.cpu_count(logical=False) or os.cpu_count() or 1


@dataclass
class SpexConfig:
    tolerance: float = DEFAULT_TOL
    edge_cap: int = DEFAULT_EDGE_CAP
    workers: int = 1
    seed: int = 42
    output: str = "json"
    out_path: Optional[Path] = None
    gap_tol: float = 1e-9
    unique_gap: float = 1e-6
    max_iter: int = DEFAULT_MAX_ITER
    timings: bool = False

    @classmethod
    def from_env(cls, environ: Optional[Mapping[str, str]] = None) -> "SpexConfig":
        environ = os.environ if environ is None else environ
        values: Dict[str, Any] = {"workers": default_workers()}
        for name, (attr, parse) in ENV_OVERRIDES.items():
            raw = environ.get(name)
            if raw is None or raw == "":
                continue
            try:
                values[attr] = parse(raw)
            except ValueError:
                raise InvalidParameter(f"{name}={raw!r} is not a valid {parse.__name__}") from None
        return cls(**values)

    def with_overrides(self, **overrides) -> "SpexConfig":
        """Copy with every non-None override applied (unset CLI flags arrive as None)."""
        known = {f.name for f in fields(self)}
        return replace(self, **{k: v for k, v in overrides.items() if k in known and v is not None})

    def validate(self) -> "SpexConfig":
        if not self.tolerance > 0:
            raise InvalidParameter(f"tolerance must be > 0, got {self.tolerance}")
        if self.edge_cap < 1:
            raise InvalidParameter(f"edge cap must be >= 1, got {self.edge_cap}")
        if self.workers < 1:
            raise InvalidParameter(f"workers must be >= 1, got {self.workers}")
        if self.output not in OUTPUT_FORMATS:
            raise InvalidParameter(f"output must be one of {OUTPUT_FORMATS}, got {self.output!r}")
        return self
