"""Command-line front end.

Subcommands: params (channel parameters), thresholds, capacity (single memory
value), sweep (capacity curve over a memory grid), verify (brute-force check
of the optimal families). Output is CSV or JSON on stdout or --out; exit
codes are 0 (success), 1 (verification finding), 2 (usage or input error).
"""

from __future__ import annotations

import argparse
import json
import sys

from .capacity import capacity_sweep, sweep_to_csv, sweep_to_json
from .channel import (
    PauliChannel,
    channel_from_config,
    channel_params,
    depolarizing,
    mp_channel,
    thresholds,
)
from .errors import PauliMemError
from .oracle import SearchConfig, report_to_csv, report_to_json, verify_optimality_grid


class _CliError(Exception):
    """Input problem that should exit with code 2."""


def _parse_q(text: str) -> tuple[float, ...]:
    parts = text.split(",")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError("expected 4 comma-separated probabilities")
    try:
        return tuple(float(p) for p in parts)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _parse_grid(text: str) -> list[float]:
    parts = text.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("expected START:END:STEP")
    try:
        start, end, step = (float(p) for p in parts)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    if step <= 0.0:
        raise argparse.ArgumentTypeError("grid step must be positive")
    if start > end:
        raise argparse.ArgumentTypeError("grid start exceeds end")
    # Endpoints inclusive within half a step.
    count = int((end - start) / step + 0.5) + 1
    return [min(start + k * step, end) for k in range(count)]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="paulimem",
        description="Two-use classical capacity of Pauli channels with correlated noise.",
    )
    source = parser.add_mutually_exclusive_group()
    source.add_argument("--q", type=_parse_q, metavar="Q0,Q1,Q2,Q3",
                        help="Pauli probabilities")
    source.add_argument("--family", choices=("depolarizing", "mp"),
                        help="named channel family (needs --p)")
    source.add_argument("--config", metavar="PATH",
                        help="JSON channel config file")
    parser.add_argument("--p", type=float, help="family parameter")
    parser.add_argument("--mu", type=float, help="memory parameter in [0, 1]")
    parser.add_argument("--mu-grid", type=_parse_grid, metavar="START:END:STEP",
                        help="inclusive memory grid")
    parser.add_argument("--format", choices=("csv", "json"), default="csv")
    parser.add_argument("--out", metavar="PATH", help="write output here instead of stdout")
    parser.add_argument("--seed", type=int, default=0, help="search seed (verify)")
    parser.add_argument("--grid-points", type=int, default=None,
                        help="search grid points per angle (verify)")
    parser.add_argument("--restarts", type=int, default=None,
                        help="random refinement restarts (verify)")
    parser.add_argument("command", choices=("params", "thresholds", "capacity", "sweep", "verify"))
    return parser


def _load_channel(args, default_mu: float | None = None) -> PauliChannel:
    """Build the channel from flags or config; --mu wins over the config file."""
    if args.config is not None:
        try:
            with open(args.config, encoding="utf-8") as fh:
                cfg = json.load(fh)
        except OSError as exc:
            raise _CliError(f"cannot read config: {exc}") from None
        except json.JSONDecodeError as exc:
            raise _CliError(f"malformed config: {exc}") from None
        return channel_from_config(cfg, mu=args.mu)
    mu = args.mu if args.mu is not None else default_mu
    if mu is None:
        raise _CliError("this command needs --mu")
    if args.q is not None:
        return PauliChannel(args.q, mu)
    if args.family is not None:
        if args.p is None:
            raise _CliError("--family requires --p")
        if args.family == "depolarizing":
            return depolarizing(args.p, mu)
        return mp_channel(args.p, mu)
    raise _CliError("no channel given: use --q, --family or --config")


def _kv_csv(pairs) -> str:
    lines = ["key,value"]
    for key, value in pairs:
        if isinstance(value, bool):
            text = "true" if value else "false"
        elif isinstance(value, float):
            text = format(value + 0.0, ".12g")
        else:
            text = str(value)
        lines.append(f"{key},{text}")
    return "\n".join(lines) + "\n"


def _cmd_params(args) -> tuple[str, int]:
    channel = _load_channel(args)
    cp = channel_params(channel)
    if args.format == "json":
        payload = {
            "q": list(channel.q),
            "mu": channel.mu,
            "eps": [float(x) for x in cp.eps],
            "eps_matrix": [[float(x) for x in row] for row in cp.eps2],
            "ordering": list(cp.ordering),
        }
        return json.dumps(payload, indent=2) + "\n", 0
    pairs = [(f"eps_{n}", float(cp.eps[n])) for n in range(4)]
    pairs += [(f"eps_{n}{k}", float(cp.eps2[n, k])) for n in range(4) for k in range(4)]
    pairs += [
        ("ordering_l", cp.ordering[0]),
        ("ordering_m", cp.ordering[1]),
        ("ordering_s", cp.ordering[2]),
    ]
    return _kv_csv(pairs), 0


def _cmd_thresholds(args) -> tuple[str, int]:
    channel = _load_channel(args, default_mu=0.0)  # thresholds ignore mu
    th = thresholds(channel)
    pairs = [
        ("mu_ml", th.mu_ml),
        ("mu_star", th.mu_star),
        ("mu_ml_raw", th.mu_ml_raw),
        ("mu_star_raw", th.mu_star_raw),
        ("degenerate", th.degenerate),
        ("no_threshold", th.no_threshold),
    ]
    if args.format == "json":
        payload = {
            key: (None if isinstance(value, float) and value != value else value)
            for key, value in pairs  # NaN is not valid JSON; emit null
        }
        return json.dumps(payload, indent=2) + "\n", 0
    return _kv_csv(pairs), 0


def _cmd_capacity(args) -> tuple[str, int]:
    channel = _load_channel(args)
    results = capacity_sweep(channel, [channel.mu])
    if args.format == "json":
        return json.dumps(results[0].to_dict(), indent=2) + "\n", 0
    return sweep_to_csv(results), 0


def _cmd_sweep(args) -> tuple[str, int]:
    if args.mu_grid is None:
        raise _CliError("sweep needs --mu-grid")
    channel = _load_channel(args, default_mu=0.0)  # grid values replace mu
    results = capacity_sweep(channel, args.mu_grid)
    if args.format == "json":
        return sweep_to_json(results), 0
    return sweep_to_csv(results), 0


def _cmd_verify(args) -> tuple[str, int]:
    if args.mu_grid is not None:
        grid = args.mu_grid
    elif args.mu is not None:
        grid = [args.mu]
    else:
        raise _CliError("verify needs --mu or --mu-grid")
    channel = _load_channel(args, default_mu=grid[0])
    overrides = {}
    if args.grid_points is not None:
        overrides["grid_points_per_angle"] = args.grid_points
    if args.restarts is not None:
        overrides["restarts"] = args.restarts
    cfg = SearchConfig(seed=args.seed, **overrides)
    report = verify_optimality_grid(channel, grid, cfg)
    if report.budget_exceeded:
        print("warning: refinement budget exceeded; results are best-so-far",
              file=sys.stderr)
    text = report_to_json(report) if args.format == "json" else report_to_csv(report)
    return text, 1 if report.any_flag else 0


_DISPATCH = {
    "params": _cmd_params,
    "thresholds": _cmd_thresholds,
    "capacity": _cmd_capacity,
    "sweep": _cmd_sweep,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        text, code = _DISPATCH[args.command](args)
    except (_CliError, PauliMemError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.out is not None:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
