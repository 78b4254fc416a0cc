"""Command line interface: ``twopath profile | report | verify``.

Every flag can also be set through an environment variable named
``TWOPATH_<FLAG>`` (upper case, dashes as underscores), e.g.
``TWOPATH_PRESET=kaon`` or ``TWOPATH_TOLERANCE=1e-12``.  Explicit flags win.

Exit codes: 0 success, 1 validation or I/O error, 2 oracle failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import oracles, series
from .config import PRESETS, ConfigError, Grid, SetupConfig, from_preset, parse_config
from .quadrature import QuadratureError

ENV_PREFIX = "TWOPATH_"
EXIT_OK, EXIT_INVALID, EXIT_ORACLE = 0, 1, 2


def _env(name: str, default=None):
    return os.environ.get(ENV_PREFIX + name.upper().replace("-", "_"), default)


class _Parser(argparse.ArgumentParser):
    # usage errors are validation errors (exit 1); 2 is reserved for oracle failures
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="twopath",
        description="Two-path interference: profiles, duality reports and oracle checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        src = p.add_mutually_exclusive_group()
        src.add_argument("--config", help="JSON configuration file")
        src.add_argument("--preset", help="named preset")
        p.add_argument("--grid", default=_env("grid"), help="sampling grid min:max:points (use --grid=-1:1:5 for negative min)")

    p = sub.add_parser("profile", help="sample a pattern and write CSV (and optionally SVG)")
    common(p)
    p.add_argument("--out-csv", default=_env("out-csv"), help="CSV path (default: stdout)")
    p.add_argument("--out-svg", default=_env("out-svg"), help="SVG path")

    p = sub.add_parser("report", help="print the duality report as JSON")
    common(p)

    p = sub.add_parser("verify", help="run the independent oracles")
    common(p)
    p.add_argument("--tolerance", type=float, default=None, help="default 1e-6")

    sub.add_parser("presets", help="list preset names")
    return parser


def load_config(args) -> SetupConfig:
    grid = Grid.parse(args.grid) if args.grid else None
    if not (args.config or args.preset):
        args.config, args.preset = _env("config"), _env("preset")
    if args.config and args.preset:
        raise ConfigError("preset", "config and preset are mutually exclusive")
    if args.preset:
        return from_preset(args.preset, grid)
    if not args.config:
        raise ConfigError("config", "one of --config or --preset is required")
    try:
        text = Path(args.config).read_text()
    except OSError as exc:
        raise ConfigError("config", f"cannot read {args.config}: {exc.strerror}") from None
    cfg = parse_config(text)
    if grid is not None:
        cfg = SetupConfig(cfg.kind, cfg.setup, cfg.preset, grid)
    return cfg


def _write(path: str, text: str):
    try:
        Path(path).write_text(text)
    except OSError as exc:
        raise ConfigError("output", f"cannot write {path}: {exc.strerror}") from None


def cmd_profile(cfg: SetupConfig, out_csv=None, out_svg=None, stdout=None):
    s = series.build_series(cfg)
    text = series.to_csv(s)
    if out_csv:
        _write(out_csv, text)
    else:
        (stdout or sys.stdout).write(text)
    if out_svg:
        _write(out_svg, series.to_svg(s))
    return s


def cmd_report(cfg: SetupConfig) -> dict:
    return series.report(cfg)


def run_oracles(cfg: SetupConfig, tolerance: float) -> list:
    if not tolerance > 0:
        raise ConfigError("tolerance", f"must be positive, got {tolerance}")
    y = series.grid_for(cfg) if cfg.grid is not None else None
    s = cfg.setup
    if cfg.kind == "bartell":
        results = [oracles.verify_bartell(s, y, tolerance), oracles.verify_bartell_sigma(s, tolerance)]
    elif cfg.kind == "beamsplitter":
        results = [oracles.verify_beamsplitter(s, y, tolerance)]
    elif cfg.kind == "meson":
        results = [oracles.verify_meson(s, y, tolerance)]
    else:
        results = [oracles.verify_mott(s, y, tolerance)]
    violation = series.report(cfg)["max_abs_residual_violation"]
    grid = series.grid_for(cfg)
    results.append(
        oracles.OracleResult(
            name="duality-scan",
            max_rel_error=violation,
            n_samples=int(grid.size),
            grid_range=(float(grid[0]), float(grid[-1])),
            tolerance=tolerance,
            passed=violation <= tolerance,
        )
    )
    return results


def cmd_verify(cfg: SetupConfig, tolerance: float) -> tuple[dict, int]:
    try:
        results = run_oracles(cfg, tolerance)
    except QuadratureError as exc:
        payload = {"kind": cfg.kind, "preset": cfg.preset, "passed": False, "error": str(exc), "results": []}
        return payload, EXIT_ORACLE
    passed = all(r.passed for r in results)
    payload = {
        "kind": cfg.kind,
        "preset": cfg.preset,
        "passed": passed,
        "results": [r.to_dict() for r in results],
    }
    return payload, EXIT_OK if passed else EXIT_ORACLE


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "presets":
        for name, (kind, _) in PRESETS.items():
            print(f"{name}\t{kind}")
        return EXIT_OK
    try:
        cfg = load_config(args)
        if args.command == "profile":
            cmd_profile(cfg, args.out_csv, args.out_svg)
            return EXIT_OK
        if args.command == "report":
            sys.stdout.write(series.dumps_report(cmd_report(cfg)))
            return EXIT_OK
        tolerance = args.tolerance
        if tolerance is None:
            raw = _env("tolerance", "1e-6")
            try:
                tolerance = float(raw)
            except ValueError:
                raise ConfigError("tolerance", f"cannot parse {raw!r}") from None
        payload, code = cmd_verify(cfg, tolerance)
        sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
        return code
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
