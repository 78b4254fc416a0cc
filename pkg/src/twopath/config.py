"""Set-up configuration documents: JSON schema, presets and validation."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import jsonschema

from . import doubleslit, meson, mott

KINDS = ("bartell", "beamsplitter", "meson", "mott")


class ConfigError(ValueError):
    """Invalid configuration; the message starts with the offending field path."""

    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}")


def _num(minimum=None, exclusive=None):
    s = {"type": "number"}
    if minimum is not None:
        s["minimum"] = minimum
    if exclusive is not None:
        s["exclusiveMinimum"] = exclusive
    return s


PARAMETER_SCHEMAS = {
    "bartell": {
        "type": "object",
        "properties": {
            "k": _num(exclusive=0),
            "x0": _num(exclusive=0),
            "d": _num(exclusive=0),
            "l": _num(exclusive=0),
            "f": _num(exclusive=0),
        },
        "required": ["k", "x0", "d", "l", "f"],
        "additionalProperties": False,
    },
    "beamsplitter": {
        "type": "object",
        "properties": {
            "k": _num(exclusive=0),
            "x0": _num(exclusive=0),
            "theta": {"type": "number", "exclusiveMinimum": 0, "exclusiveMaximum": math.pi / 2},
            "L": _num(minimum=0),
        },
        "required": ["k", "x0", "theta", "L"],
        "additionalProperties": False,
    },
    "meson": {
        "type": "object",
        "properties": {
            "delta_m": _num(exclusive=0),
            "gamma_S": _num(exclusive=0),
            "gamma_L": _num(exclusive=0),
        },
        "required": ["delta_m", "gamma_S", "gamma_L"],
        "additionalProperties": False,
    },
    "mott": {
        "type": "object",
        "properties": {
            "Z": {"type": "integer", "minimum": 1},
            "mass_energy": _num(exclusive=0),
            "E": _num(exclusive=0),
            "spin2": {"type": "integer", "minimum": 0},
            "polarized": {"type": "boolean"},
        },
        "required": ["Z", "mass_energy", "E"],
        "additionalProperties": False,
    },
}

CONFIG_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "twopath set-up configuration",
    "type": "object",
    "properties": {
        "kind": {"enum": list(KINDS)},
        "preset": {"type": "string"},
        "parameters": {"type": "object"},
        "grid": {
            "type": "object",
            "properties": {
                "min": {"type": "number"},
                "max": {"type": "number"},
                "points": {"type": "integer", "minimum": 2},
            },
            "required": ["min", "max", "points"],
            "additionalProperties": False,
        },
    },
    "required": ["kind"],
    "additionalProperties": False,
}

SETUP_TYPES = {
    "bartell": doubleslit.BartellSetup,
    "beamsplitter": doubleslit.BeamSplitterSetup,
    "meson": meson.MesonParams,
    "mott": mott.MottParams,
}

PRESETS = {
    "bartell-reference": ("bartell", doubleslit.BARTELL_REFERENCE),
    "beamsplitter-reference": ("beamsplitter", doubleslit.BEAMSPLITTER_REFERENCE),
    "kaon": ("meson", meson.KAON),
    **{name: ("mott", p) for name, p in mott.PRESETS.items()},
}


@dataclass(frozen=True)
class Grid:
    min: float
    max: float
    points: int

    def __post_init__(self):
        if not (math.isfinite(self.min) and math.isfinite(self.max)) or self.min >= self.max:
            raise ConfigError("grid", f"need finite min < max, got {self.min}:{self.max}")
        if self.points < 2:
            raise ConfigError("grid.points", f"must be >= 2, got {self.points}")

    @classmethod
    def parse(cls, text: str) -> Grid:
        """From the CLI form ``min:max:points``."""
        parts = text.split(":")
        if len(parts) != 3:
            raise ConfigError("grid", f"expected min:max:points, got {text!r}")
        try:
            return cls(float(parts[0]), float(parts[1]), int(parts[2]))
        except ValueError as exc:
            if isinstance(exc, ConfigError):
                raise
            raise ConfigError("grid", f"cannot parse {text!r}: {exc}") from None


@dataclass(frozen=True)
class SetupConfig:
    kind: str
    setup: object
    preset: str | None = None
    grid: Grid | None = None


def _path(error: jsonschema.ValidationError, prefix: tuple = ()) -> str:
    parts = [*prefix, *error.absolute_path]
    if error.validator == "required":
        missing = error.message.split("'")[1]
        parts.append(missing)
    elif error.validator == "additionalProperties":
        extra = error.message.split("'")[1]
        parts.append(extra)
    return ".".join(str(p) for p in parts) or "<root>"


def _validate(instance, schema, prefix=()):
    validator = jsonschema.Draft202012Validator(schema)
    errors = sorted(validator.iter_errors(instance), key=lambda e: list(e.absolute_path))
    if errors:
        e = errors[0]
        raise ConfigError(_path(e, prefix), e.message)


def from_preset(name: str, grid: Grid | None = None) -> SetupConfig:
    if name not in PRESETS:
        raise ConfigError("preset", f"unknown preset {name!r}; known: {', '.join(PRESETS)}")
    kind, setup = PRESETS[name]
    return SetupConfig(kind=kind, setup=setup, preset=name, grid=grid)


def parse_config(doc) -> SetupConfig:
    """Validate a configuration document (JSON text or an already-decoded dict)."""
    if isinstance(doc, (str, bytes)):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as exc:
            raise ConfigError("<root>", f"not valid JSON: {exc}") from None
    _validate(doc, CONFIG_SCHEMA)
    kind = doc["kind"]
    has_preset, has_params = "preset" in doc, "parameters" in doc
    if has_preset and has_params:
        raise ConfigError("preset", "preset and parameters are mutually exclusive")
    if not (has_preset or has_params):
        raise ConfigError("parameters", "either parameters or preset is required")

    grid = None
    if "grid" in doc:
        g = doc["grid"]
        grid = Grid(float(g["min"]), float(g["max"]), int(g["points"]))

    if has_preset:
        cfg = from_preset(doc["preset"], grid)
        if cfg.kind != kind:
            raise ConfigError("preset", f"preset {doc['preset']!r} is a {cfg.kind} set-up, not {kind}")
        return cfg

    params = doc["parameters"]
    _validate(params, PARAMETER_SCHEMAS[kind], prefix=("parameters",))
    try:
        setup = SETUP_TYPES[kind](**params)
    except ValueError as exc:
        raise ConfigError(f"parameters.{_field_of(str(exc), params)}", str(exc)) from None
    return SetupConfig(kind=kind, setup=setup, grid=grid)


def _field_of(message: str, params: dict) -> str:
    """Best guess at which parameter a set-up invariant message refers to."""
    for name in sorted(params, key=len, reverse=True):
        if message.startswith(name + " ") or message.startswith(name + "="):
            return name
    return "<invariant>"
