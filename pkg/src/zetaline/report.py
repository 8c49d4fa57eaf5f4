"""Run configuration, report envelopes and delimited output.

Config values resolve in order: built-in defaults, then a key-value
config file, then ZETALINE_* environment variables, then explicit CLI
flags.  Floats are printed with 17 significant digits in CSV so every
value round-trips; JSON uses Python's shortest round-trip repr.  The
envelope timestamp honors SOURCE_DATE_EPOCH for reproducible outputs.
"""

from __future__ import annotations

import dataclasses
import json
import os
import time
from dataclasses import dataclass, field, fields
from pathlib import Path
from typing import Any, Iterable

from . import __version__
from .config import EvalConfig
from .errors import ConfigError

ENV_PREFIX = "ZETALINE_"


def fmt(x: Any) -> str:
    """CSV cell formatting; floats carry 17 significant digits."""
    if isinstance(x, bool):
        return str(x).lower()
    if isinstance(x, float):
        return format(x, ".17g")
    return str(x)


def write_csv(path: str | Path, header: Iterable[str],
              rows: Iterable[Iterable[Any]],
              trailer_lines: Iterable[str] = ()) -> None:
    lines = [",".join(header)]
    lines += [",".join(fmt(c) for c in row) for row in rows]
    lines += list(trailer_lines)
    Path(path).write_text("\n".join(lines) + "\n")


@dataclass
class RunConfig:
    """Tolerances, truncation sizes and execution knobs for the CLI."""

    abs_tol: float = 1e-10
    quadrature_tol: float = 1e-8
    zero_tol: float = 1e-9
    residual_tol: float = 1e-5
    zero_guard: float = 1e-6
    identity_tol: float = 1e-6
    vertical_tol: float = 1e-7
    asymptotic_tol: float = 0.5
    max_step: float = 0.25
    em_cutoff: int = 64
    em_bernoulli_terms: int = 25
    dirichlet_terms: int = 1_000_000
    weierstrass_terms: int = 1_000_000
    threads: int = 0  # 0 = machine parallelism

    def __post_init__(self):
        self.validate()

    def validate(self) -> None:
        for f in fields(self):
            v = getattr(self, f.name)
            if f.name == "threads":
                if not isinstance(v, int) or v < 0:
                    raise ConfigError("threads must be a nonnegative integer")
            elif f.type == "int":
                if not isinstance(v, int) or v < 1:
                    raise ConfigError(f"{f.name} must be a positive integer")
            else:
                if not v > 0.0:
                    raise ConfigError(f"{f.name} must be positive")

    def eval_config(self) -> EvalConfig:
        return EvalConfig(
            dirichlet_terms=self.dirichlet_terms, em_cutoff=self.em_cutoff,
            em_bernoulli_terms=self.em_bernoulli_terms, abs_tol=self.abs_tol,
            weierstrass_terms=self.weierstrass_terms)

    def effective_threads(self) -> int:
        if self.threads > 0:
            return self.threads
        return os.cpu_count() or 1

    def to_dict(self) -> dict[str, Any]:
        return dataclasses.asdict(self)

    def echo_dict(self) -> dict[str, Any]:
        """Config echo for report envelopes.

        Excludes execution knobs (thread count) that must not influence
        results, so identical numerical configs yield identical reports.
        """
        d = self.to_dict()
        d.pop("threads")
        return d

    @classmethod
    def _coerce(cls, name: str, raw: str) -> Any:
        ftypes = {f.name: f.type for f in fields(cls)}
        if name not in ftypes:
            raise ConfigError(f"unknown config key {name!r}")
        return int(raw) if ftypes[name] == "int" else float(raw)

    @classmethod
    def from_sources(cls, config_path: str | None = None,
                     env: dict[str, str] | None = None,
                     overrides: dict[str, Any] | None = None) -> "RunConfig":
        values: dict[str, Any] = {}
        if config_path:
            values.update(cls._parse_file(config_path))
        env = os.environ if env is None else env
        for f in fields(cls):
            key = ENV_PREFIX + f.name.upper()
            if key in env:
                values[f.name] = cls._coerce(f.name, env[key])
        for k, v in (overrides or {}).items():
            if v is not None:
                values[k] = v
        return cls(**values)

    @classmethod
    def _parse_file(cls, path: str | Path) -> dict[str, Any]:
        """Key-value lines: `name = value`, '#' starts a comment."""
        values: dict[str, Any] = {}
        text = Path(path).read_text()
        for lineno, line in enumerate(text.splitlines(), 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ConfigError(f"{path}:{lineno}: expected 'key = value'")
            name, raw = (part.strip() for part in line.split("=", 1))
            values[name] = cls._coerce(name, raw)
        return values

    def to_file(self, path: str | Path) -> None:
        lines = [f"{f.name} = {fmt(getattr(self, f.name))}" for f in fields(self)]
        Path(path).write_text("\n".join(lines) + "\n")


def _timestamp() -> str:
    epoch = os.environ.get("SOURCE_DATE_EPOCH")
    t = int(epoch) if epoch else int(time.time())
    return time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime(t))


@dataclass
class ReportEnvelope:
    """Versioned wrapper for structured reports."""

    command: str
    config: dict[str, Any]
    payload: dict[str, Any]
    flags: list[str] = field(default_factory=list)
    version: str = __version__
    timestamp: str = field(default_factory=_timestamp)

    def to_json(self) -> str:
        return json.dumps(dataclasses.asdict(self), sort_keys=True, indent=2)

    @classmethod
    def from_json(cls, text: str) -> "ReportEnvelope":
        raw = json.loads(text)
        return cls(command=raw["command"], config=raw["config"],
                   payload=raw["payload"], flags=raw["flags"],
                   version=raw["version"], timestamp=raw["timestamp"])

    def write(self, path: str | Path) -> None:
        Path(path).write_text(self.to_json() + "\n")
