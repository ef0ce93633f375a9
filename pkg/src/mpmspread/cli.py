"""Command-line front end.

Subcommands::

    run          one evaluation point
    sweep-alpha  AS versus Tx direction over --grid a:b:step
    sweep-ds     AS versus delay spread (--ds-ns takes a comma list)
    table        the 44-cell reception-point or Rx-output grid
    plotdata     two-column curve files for the direction / delay-spread figures

Records go to stdout or ``--output`` as CSV (default) or JSON lines.
``--config FILE`` presets any long option from ``key = value`` lines;
command-line flags win.  Exit codes: 0 ok, 1 runtime failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import replace
from pathlib import Path
from typing import Sequence

from .antenna import PRESETS, AntennaPattern, gaussian_beam, omni
from .pas import LocalScatterConfig, LosConfig
from .runner import (
    RunConfig, RunResult, run_point, sweep_alpha_t, sweep_ds, table_reception, table_rx_output,
)
from .tdl import Environment, ProfileId, environment_families, get_scenario

DEFAULT_SEED = 42

FIELDS = [
    "scenario", "environment", "tdl", "ds_ns", "distance_m", "tx_kind", "tx_hpbw_deg", "alpha_t_deg",
    "rx_kind", "alpha_r_deg", "as_reception_deg", "as_rx_output_deg", "mc_stderr_deg", "seed",
    "mean_reception_deg", "mean_rx_output_deg", "mc_stderr_rx_output_deg",
]

# Figures 2-9: one environment and one Tx beam each
FIGURE_SWEEPS = {
    2: (Environment.INDOOR_OFFICE, "nba"),
    3: (Environment.INDOOR_OFFICE, "wba"),
    4: (Environment.UMI_STREET_CANYON, "nba"),
    5: (Environment.UMI_STREET_CANYON, "wba"),
    6: (Environment.UMA, "nba"),
    7: (Environment.UMA, "wba"),
    8: (Environment.O2I, "nba"),
    9: (Environment.O2I, "wba"),
}


class UsageError(Exception):
    pass


def parse_grid(text: str) -> list[float]:
    """``a:b:step`` inclusive of ``b`` when it lands on the grid."""
    try:
        a, b, step = (float(x) for x in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"grid must be a:b:step, got {text!r}") from None
    if step <= 0 or b < a:
        raise argparse.ArgumentTypeError(f"grid needs step > 0 and b >= a, got {text!r}")
    n = int(math.floor((b - a) / step + 1e-9)) + 1
    return [round(a + i * step, 10) for i in range(n)]


def parse_float_list(text: str) -> list[float]:
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None


def read_config_file(path: str) -> dict[str, str]:
    out = {}
    for lineno, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{lineno}: expected key = value")
        key, value = (s.strip() for s in line.split("=", 1))
        out[key.lstrip("-").replace("-", "_")] = value
    return out


def _common(p: argparse.ArgumentParser, scenario: bool = True) -> None:
    if scenario:
        p.add_argument("--scenario", default="Sc1")
        p.add_argument("--tdl", default="TDL-A", choices=["TDL-A", "TDL-B"])
        p.add_argument("--tx", default="nba", choices=["nba", "wba", "omni", "custom"])
        p.add_argument("--tx-hpbw", type=float)
        p.add_argument("--alpha-t", type=float, default=180.0)
        p.add_argument("--rx", default="omni", choices=["nba", "wba", "omni", "custom"])
        p.add_argument("--rx-hpbw", type=float)
        p.add_argument("--alpha-r", type=float, default=0.0)
        p.add_argument("--distance-m", type=float)
    p.add_argument("--kappa", type=float, default=50.0)
    p.add_argument("--mu", type=float, default=0.0)
    p.add_argument("--rice-k", type=float)
    p.add_argument("--samples", type=int, default=200_000)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--format", choices=["csv", "jsonl"], default="csv")
    p.add_argument("--output")
    p.add_argument("--config", help="key = value file presetting long options")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mpmspread", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)
    parser.subcommands = sub.choices

    p = sub.add_parser("run", help="single evaluation point")
    _common(p)
    p.add_argument("--ds-ns", type=float)

    p = sub.add_parser("sweep-alpha", help="AS versus alpha_t")
    _common(p)
    p.add_argument("--ds-ns", type=float)
    p.add_argument("--grid", type=parse_grid, default=parse_grid("0:180:5"))

    p = sub.add_parser("sweep-ds", help="AS versus delay spread")
    _common(p)
    p.add_argument("--ds-ns", type=parse_float_list,
                   help="comma list; default: the scenario family's delay spreads")

    p = sub.add_parser("table", help="44-cell scenario grid at alpha_t=180, alpha_r=0")
    _common(p, scenario=False)
    p.add_argument("--which", choices=["reception", "rx-output"], default="reception")

    p = sub.add_parser("plotdata", help="per-curve (x, y) files for figures 2-10")
    _common(p, scenario=False)
    p.add_argument("--figure", type=int, choices=list(range(2, 11)))
    p.add_argument("--input", help="records file (csv or jsonl) from a previous run")
    p.add_argument("--tdl", default="TDL-A", choices=["TDL-A", "TDL-B"])
    p.add_argument("--tx", default="wba", choices=["nba", "wba"], help="Tx beam for figure 10")
    p.add_argument("--grid", type=parse_grid, default=parse_grid("0:180:5"))
    p.add_argument("--outdir", default=".")
    return parser


def _antenna(kind: str, hpbw: float | None, flag: str) -> AntennaPattern:
    if kind == "custom":
        if hpbw is None:
            raise UsageError(f"--{flag} custom needs --{flag}-hpbw")
        return gaussian_beam(hpbw, name="custom")
    if hpbw is not None:
        raise UsageError(f"--{flag}-hpbw only applies to --{flag} custom")
    return PRESETS[kind]


def config_from_args(args: argparse.Namespace) -> RunConfig:
    los = LosConfig(args.rice_k) if args.rice_k is not None else None
    return RunConfig(
        scenario_id=get_scenario(args.scenario).id,
        tdl_profile=ProfileId.parse(args.tdl),
        tx=_antenna(args.tx, args.tx_hpbw, "tx"),
        rx=_antenna(args.rx, args.rx_hpbw, "rx"),
        alpha_t_deg=args.alpha_t,
        alpha_r_deg=args.alpha_r,
        local=LocalScatterConfig(args.kappa, args.mu),
        los=los,
        n_per_component=args.samples,
        base_seed=args.seed,
        ds_ns=args.ds_ns if args.command in ("run", "sweep-alpha") else None,
        distance_m=args.distance_m,
    )


def _fmt(x: float | None, digits: int = 6) -> str | None:
    if x is None:
        return None
    text = f"{x:.{digits}f}"
    # no "-0.000000" for values that round to zero
    return text[1:] if text.startswith("-") and float(text) == 0.0 else text


def record(res: RunResult) -> dict:
    cfg = res.config
    sc = cfg.scenario
    return {
        "scenario": sc.id,
        "environment": sc.environment.value,
        "tdl": cfg.tdl_profile.value,
        "ds_ns": f"{cfg.effective_ds_ns:g}",
        "distance_m": f"{cfg.effective_distance_m:g}",
        "tx_kind": cfg.tx.name or cfg.tx.kind.value,
        "tx_hpbw_deg": None if cfg.tx.is_omni else f"{cfg.tx.hpbw_deg:g}",
        "alpha_t_deg": f"{cfg.alpha_t_deg:g}",
        "rx_kind": cfg.rx.name or cfg.rx.kind.value,
        "alpha_r_deg": f"{cfg.alpha_r_deg:g}",
        "as_reception_deg": _fmt(res.as_reception_deg),
        "as_rx_output_deg": _fmt(res.as_rx_output_deg),
        "mc_stderr_deg": _fmt(res.stderr_reception),
        "seed": str(cfg.base_seed),
        "mean_reception_deg": _fmt(res.mean_reception_deg),
        "mean_rx_output_deg": _fmt(res.mean_rx_output_deg),
        "mc_stderr_rx_output_deg": _fmt(res.stderr_rx_output),
    }


def write_records(records: list[dict], fmt: str, stream) -> None:
    if fmt == "csv":
        w = csv.DictWriter(stream, fieldnames=FIELDS, lineterminator="\n")
        w.writeheader()
        for r in records:
            w.writerow({k: ("" if r[k] is None else r[k]) for k in FIELDS})
    else:
        for r in records:
            typed = {k: _typed(k, r[k]) for k in FIELDS}
            stream.write(json.dumps(typed, sort_keys=False) + "\n")


_TEXT_FIELDS = {"scenario", "environment", "tdl", "tx_kind", "rx_kind"}


def _typed(key: str, value):
    if value is None or value == "" or key in _TEXT_FIELDS:
        return None if value == "" else value
    return int(value) if key == "seed" else float(value)


def read_records(path: str) -> list[dict]:
    text = Path(path).read_text(encoding="utf-8")
    if not text.strip():
        return []
    if text.lstrip().startswith("{"):
        return [json.loads(line) for line in text.splitlines() if line.strip()]
    rows = list(csv.DictReader(io.StringIO(text)))
    return [{k: _typed(k, v) for k, v in row.items()} for row in rows]


def _emit(records: list[dict], args) -> None:
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            write_records(records, args.format, fh)
    else:
        write_records(records, args.format, sys.stdout)


def write_curve(path: Path, xlabel: str, ylabel: str, points: Sequence[tuple[float, float]]) -> None:
    lines = [f"# {xlabel} {ylabel}"] + [f"{x:.6g} {y:.6f}" for x, y in points]
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def _base_config(args) -> RunConfig:
    los = LosConfig(args.rice_k) if args.rice_k is not None else None
    return RunConfig(local=LocalScatterConfig(args.kappa, args.mu), los=los,
                     n_per_component=args.samples, base_seed=args.seed)


def plotdata_from_records(records: list[dict], outdir: Path) -> list[Path]:
    if not records:
        raise ValueError("empty input: no records to plot")
    curves: dict[tuple, list[dict]] = {}
    for r in records:
        curves.setdefault((r["scenario"], r["tdl"], r["tx_kind"], r["rx_kind"]), []).append(r)
    written = []
    for (sc, tdl, tx, rx), rows in curves.items():
        xkey = "alpha_t_deg" if len({r["alpha_t_deg"] for r in rows}) > 1 else "ds_ns"
        pts = sorted((float(r[xkey]), float(r["as_reception_deg"])) for r in rows)
        path = outdir / f"curve_{sc}_{tdl}_{tx}_{rx}.dat"
        write_curve(path, xkey, "as_reception_deg", pts)
        written.append(path)
    return written


def plotdata_figure(figure: int, args) -> list[Path]:
    outdir = Path(args.outdir)
    base = _base_config(args)
    profile = ProfileId.parse(args.tdl)
    written = []
    if figure == 10:
        tx = PRESETS[args.tx]
        for env, scenarios in environment_families().items():
            cfgs = [replace(base, scenario_id=sc.id, tdl_profile=profile, tx=tx, alpha_t_deg=180.0)
                    for sc in scenarios]
            pts = [(c.effective_ds_ns, run_point(c).as_reception_deg) for c in cfgs]
            path = outdir / f"fig10_{env.value}_{profile.value}_{args.tx}.dat"
            write_curve(path, "ds_ns", "as_reception_deg", pts)
            written.append(path)
        return written
    env, beam = FIGURE_SWEEPS[figure]
    for sc in environment_families()[env]:
        cfg = replace(base, scenario_id=sc.id, tdl_profile=profile, tx=PRESETS[beam])
        pts = [(a, r.as_reception_deg) for a, r in sweep_alpha_t(cfg, args.grid)]
        path = outdir / f"fig{figure:02d}_{sc.id}_{profile.value}_{beam}.dat"
        write_curve(path, "alpha_t_deg", "as_reception_deg", pts)
        written.append(path)
    return written


def _dispatch(args) -> int:
    if args.command == "run":
        _emit([record(run_point(config_from_args(args)))], args)
    elif args.command == "sweep-alpha":
        cfg = config_from_args(args)
        _emit([record(r) for _, r in sweep_alpha_t(cfg, args.grid)], args)
    elif args.command == "sweep-ds":
        cfg = config_from_args(args)
        ds_list = args.ds_ns
        if not ds_list:
            env = cfg.scenario.environment
            ds_list = [sc.ds_ns for sc in environment_families()[env]]
        _emit([record(r) for _, r in sweep_ds(cfg, ds_list)], args)
    elif args.command == "table":
        fn = table_reception if args.which == "reception" else table_rx_output
        _emit([record(c.result) for c in fn(_base_config(args))], args)
    elif args.command == "plotdata":
        Path(args.outdir).mkdir(parents=True, exist_ok=True)
        if args.input:
            paths = plotdata_from_records(read_records(args.input), Path(args.outdir))
        elif args.figure is not None:
            paths = plotdata_figure(args.figure, args)
        else:
            raise UsageError("plotdata needs --figure or --input")
        for p in paths:
            print(p)
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("--config")
    known, _ = pre.parse_known_args(argv)
    try:
        if known.config:
            preset = read_config_file(known.config)
            # presets become defaults of the chosen subcommand; flags override
            sub = next((a for a in argv if not a.startswith("-")), None)
            if sub in parser.subcommands:
                target = parser.subcommands[sub]
                dests = {a.dest: a for a in target._actions}
                unknown = sorted(set(preset) - set(dests))
                if unknown:
                    raise UsageError(f"unknown config keys: {', '.join(unknown)}")
                target.set_defaults(**{k: _convert(dests[k], v) for k, v in preset.items()})
    except (UsageError, OSError, argparse.ArgumentTypeError) as exc:
        parser.print_usage(sys.stderr)
        print(f"mpmspread: error: {exc}", file=sys.stderr)
        return 2
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _dispatch(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"mpmspread: error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"mpmspread: error: {msg}", file=sys.stderr)
        return 1


def _convert(action: argparse.Action, value: str):
    if action.type is not None:
        return action.type(value)
    if action.choices is not None and value not in action.choices:
        raise UsageError(f"invalid value {value!r} for {action.dest}")
    return value


if __name__ == "__main__":
    sys.exit(main())
