"""Run configuration: defaults, ``key=value`` files and overrides."""
from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Optional

from .errors import ContractError
from .spaces import parse_rational

FORMATS = ("json", "csv", "text")


class ConfigError(ContractError):
    pass


@dataclass(frozen=True)
class RunConfig:
    epsilon: Fraction = Fraction(1, 100)
    scale_d: int = 20
    affine_d: int = 200
    twist_n: int = 200
    horizon: int = 18
    random_horizon: int = 200
    samples: int = 100_000
    cascade_points: int = 6
    max_k: int = 256
    seed: int = 0
    workers: int = 1
    format: str = "text"
    output: Optional[str] = None

    def __post_init__(self):
        if self.epsilon <= 0:
            raise ConfigError("epsilon must be positive")
        for name in ("scale_d", "affine_d", "twist_n", "horizon", "random_horizon",
                     "samples", "cascade_points", "max_k", "workers"):
            if getattr(self, name) < 1:
                raise ConfigError(f"{name} must be positive")
        if self.format not in FORMATS:
            raise ConfigError(f"format must be one of {', '.join(FORMATS)}")

    def replace(self, **changes) -> "RunConfig":
        changes = {k: v for k, v in changes.items() if v is not None}
        return dataclasses.replace(self, **changes)

    def describe(self) -> dict:
        return {f.name: str(getattr(self, f.name)) for f in dataclasses.fields(self)
                if f.name not in ("format", "output", "workers")}


def _coerce(name: str, raw: str):
    if name == "epsilon":
        return parse_rational(raw)
    if name in ("format", "output"):
        return raw
    try:
        return int(raw)
    except ValueError:
        raise ConfigError(f"{name} expects an integer, got {raw!r}") from None


def parse_config(text: str, base: Optional[RunConfig] = None) -> RunConfig:
    """Parse ``key=value`` lines; ``#`` starts a comment."""
    values = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, raw = line.partition("=")
        key, raw = key.strip(), raw.strip()
        if not sep or not key:
            raise ConfigError(f"line {lineno}: expected key=value")
        if key not in RunConfig.__dataclass_fields__:
            raise ConfigError(f"line {lineno}: unknown key {key!r}")
        try:
            values[key] = _coerce(key, raw)
        except ContractError as exc:
            raise ConfigError(f"line {lineno}: {exc}") from None
    try:
        return (base or RunConfig()).replace(**values)
    except ConfigError as exc:
        raise ConfigError(f"invalid configuration: {exc}") from None


def load_config(path) -> RunConfig:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from None
    return parse_config(text)
