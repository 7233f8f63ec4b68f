"""Command-line front end: presets, custom runs, CSV/JSON/manifest output.

Exit codes: 0 success, 1 validation problem, 2 I/O problem.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path

from . import __version__
from .config import ConfigError, ScenarioConfig, Scheme, parse_eve_mode, parse_scheme
from .montecarlo import sweep, write_csv, write_json


@dataclass(frozen=True)
class Preset:
    param: str
    values: tuple[float, ...]
    schemes: tuple[Scheme, ...]


def _grid(start: float, stop: float, step: float) -> tuple[float, ...]:
    out = []
    i = 0
    while True:
        v = round(start + i * step, 10)
        if v > stop + 1e-12:
            break
        out.append(v)
        i += 1
    return tuple(out)


# sweep grids are implementation defaults, recorded in every manifest
PRESETS = {
    "fig2": Preset(
        param="gamma_a_db",
        values=_grid(0.0, 40.0, 2.0),
        schemes=(Scheme.PLC_ONLY, Scheme.WIRELESS_ONLY, Scheme.TSC, Scheme.AN_SHARING),
    ),
    "fig3": Preset(
        param="gamma_b_db",
        values=_grid(0.0, 30.0, 2.0),
        schemes=(Scheme.TSC, Scheme.AN_SHARING),
    ),
    "fig4": Preset(
        param="target_r",
        values=_grid(0.25, 5.0, 0.25),
        schemes=(Scheme.PLC_ONLY, Scheme.WIRELESS_ONLY, Scheme.TSC, Scheme.AN_SHARING),
    ),
    "fig5": Preset(
        param="theta",
        values=_grid(0.0, 1.0, 0.05),
        schemes=(Scheme.TSC, Scheme.AN_SHARING),
    ),
}


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad flags; remap to the validation exit code
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(
        prog="hybridsec",
        description=(
            "Monte-Carlo secure-throughput simulator for hybrid parallel "
            "PLC/wireless OFDM links."
        ),
    )
    p.add_argument("--preset", choices=sorted(PRESETS), help="named sweep preset")
    p.add_argument(
        "--config",
        help="JSON config file (flat key-value schema, or a previously written run manifest)",
    )
    p.add_argument("--seed", type=int, help="base RNG seed")
    p.add_argument("--trials", type=int, help="Monte-Carlo trials per sweep point")
    p.add_argument("--gamma-a-db", type=float, help="Alice total input SNR in dB")
    p.add_argument("--gamma-b-db", type=float, help="Bob AN input SNR in dB")
    p.add_argument("--theta", type=float, help="fraction of Alice's power spent on data")
    p.add_argument("--target-r", type=float, help="target secrecy rate in bits/s/Hz")
    p.add_argument(
        "--eve-mode",
        choices=["single-plc", "single-wireless", "two-link"],
        help="eavesdropping model",
    )
    p.add_argument(
        "--scheme",
        choices=["tsc", "an-sharing", "plc-only", "wireless-only"],
        help="transmission scheme (custom runs; presets define their own list)",
    )
    p.add_argument("--plc-channel-file", help="CSV file overriding the Alice-Bob PLC response")
    p.add_argument("--out-dir", default="results", help="output directory (default: results)")
    p.add_argument("--json", action="store_true", help="also write a JSON mirror of the CSV")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    return p


_FLAG_FIELDS = (
    "seed",
    "trials",
    "gamma_a_db",
    "gamma_b_db",
    "theta",
    "target_r",
    "plc_channel_file",
)


def _load_config_file(path: str) -> tuple[ScenarioConfig, dict | None]:
    """Read a flat config file or a run manifest; returns (config, manifest)."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}: not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ConfigError(f"{path}: config must be a JSON object")
    if "config" in data and "preset" in data:
        manifest = data
        return ScenarioConfig.from_dict(manifest["config"]), manifest
    return ScenarioConfig.from_dict(data), None


def resolve_config(args) -> tuple[ScenarioConfig, dict | None]:
    """Config file values (if any) overridden by explicit flags."""
    if args.config:
        cfg, manifest = _load_config_file(args.config)
    else:
        cfg, manifest = ScenarioConfig(), None
    updates = {}
    for name in _FLAG_FIELDS:
        value = getattr(args, name)
        if value is not None:
            updates[name] = value
    if args.eve_mode is not None:
        updates["eve_mode"] = parse_eve_mode(args.eve_mode)
    if args.scheme is not None:
        updates["scheme"] = parse_scheme(args.scheme)
    if updates:
        from dataclasses import replace

        cfg = replace(cfg, **updates)
    return cfg.validate(), manifest


def _run(
    name: str,
    cfg: ScenarioConfig,
    param: str,
    values,
    schemes,
    out_dir: Path,
    want_json: bool,
) -> dict:
    out_dir.mkdir(parents=True, exist_ok=True)
    records = sweep(cfg, param, values, schemes=list(schemes))
    csv_path = out_dir / f"{name}.csv"
    write_csv(records, csv_path)
    outputs = {"csv": str(csv_path)}
    if want_json:
        json_path = out_dir / f"{name}.json"
        write_json(records, cfg, json_path)
        outputs["json"] = str(json_path)
    manifest = {
        "tool": "hybridsec",
        "version": __version__,
        "preset": name,
        "param": param,
        "values": list(values),
        "schemes": [s.value for s in schemes],
        "config": cfg.to_dict(),
        "seed": cfg.seed,
        "outputs": outputs,
        "timestamp": datetime.now(timezone.utc).isoformat(),
    }
    manifest_path = out_dir / f"{name}_manifest.json"
    with open(manifest_path, "w", encoding="utf-8") as fh:
        json.dump(manifest, fh, indent=2, sort_keys=True)
        fh.write("\n")
    outputs["manifest"] = str(manifest_path)
    return manifest


def run_preset(name: str, cfg: ScenarioConfig, out_dir, want_json: bool = False) -> dict:
    """Run a named preset sweep; returns the manifest."""
    preset = PRESETS[name]
    return _run(name, cfg, preset.param, preset.values, preset.schemes, Path(out_dir), want_json)


def run_custom(cfg: ScenarioConfig, out_dir, want_json: bool = False) -> dict:
    """Run a single-point estimate of cfg as a one-value sweep."""
    return _run(
        "custom", cfg, "gamma_a_db", [cfg.gamma_a_db], [cfg.scheme], Path(out_dir), want_json
    )


def rerun_manifest(manifest: dict, cfg: ScenarioConfig, out_dir, want_json: bool) -> dict:
    """Reproduce a previous run from its manifest (same grids and seed)."""
    schemes = [parse_scheme(s) for s in manifest["schemes"]]
    return _run(
        manifest["preset"],
        cfg,
        manifest["param"],
        manifest["values"],
        schemes,
        Path(out_dir),
        want_json,
    )


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg, manifest = resolve_config(args)
        if args.preset:
            result = run_preset(args.preset, cfg, args.out_dir, args.json)
        elif manifest is not None:
            result = rerun_manifest(manifest, cfg, args.out_dir, args.json)
        else:
            result = run_custom(cfg, args.out_dir, args.json)
    except ConfigError as exc:
        print(f"hybridsec: error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"hybridsec: i/o error: {exc}", file=sys.stderr)
        return 2
    print(f"wrote {result['outputs']['csv']}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
