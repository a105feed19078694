"""Command-line front end.

Subcommands: run (one scheme, errors CSV), compare (two schemes, diff CSV
plus per-scheme error CSVs), eoc (refinement table), scan (stability
thresholds). Exit codes: 0 success, 1 invalid configuration, 2 numerical
blow-up (partial CSV flushed).
"""
from __future__ import annotations

import argparse
import dataclasses
import sys
from pathlib import Path

from .basis import CorrectionKind, NodeKind
from .csvio import write_diff_csv, write_error_csv
from .driver import (RunConfig, Scheme, compare_schemes_detailed, eoc_study,
                     run_simulation, stability_scan)
from .errors import BlowUpError, ConfigError, DataError

_POINTS = {"gl": NodeKind.GAUSS_LEGENDRE, "gll": NodeKind.GAUSS_LOBATTO_LEGENDRE}
_CORRECTIONS = {"radau": CorrectionKind.RADAU, "g2": CorrectionKind.G2}
_SCHEMES = {s.value: s for s in Scheme}


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad arguments; 2 is reserved for blow-up.
    def error(self, message):
        self.print_usage(sys.stderr)
        raise ConfigError(message)


def _add_common(p: argparse.ArgumentParser, multi_scheme: bool = False):
    p.add_argument("--degree", type=int, default=3)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--elements", type=int, default=None)
    group.add_argument("--dofs", type=int, default=None)
    p.add_argument("--points", choices=sorted(_POINTS), default="gl")
    p.add_argument("--correction", choices=sorted(_CORRECTIONS), default="radau")
    if multi_scheme:
        p.add_argument("--scheme", choices=sorted(_SCHEMES), action="append",
                       default=None)
    else:
        p.add_argument("--scheme", choices=sorted(_SCHEMES), default="ader")
    p.add_argument("--ic", default="wavepacket")
    p.add_argument("--bc", choices=["periodic", "dirichlet"], default="periodic")
    p.add_argument("--speed", type=float, default=5.0)
    p.add_argument("--flux", choices=["linear", "burgers"], default="linear")
    p.add_argument("--cfl", type=float, default=0.9)
    p.add_argument("--tfinal", type=float, default=0.4)
    p.add_argument("--record-interval", type=int, default=None)
    p.add_argument("--out", type=Path, default=None)


def _n_elements(args) -> int:
    if args.elements is not None:
        return args.elements
    dofs = args.dofs if args.dofs is not None else 240
    per_elem = args.degree + 1
    if dofs % per_elem != 0:
        raise ConfigError(
            f"--dofs {dofs} is not divisible by N+1 = {per_elem}")
    return dofs // per_elem


def _config(args, scheme: str, record_default: int) -> RunConfig:
    interval = args.record_interval
    if interval is None:
        interval = record_default
    return RunConfig(
        degree=args.degree,
        n_elem=_n_elements(args),
        points=_POINTS[args.points],
        correction=_CORRECTIONS[args.correction],
        scheme=_SCHEMES[scheme],
        ic=args.ic,
        flux=args.flux,
        speed=args.speed,
        bc=args.bc,
        cfl_safety=args.cfl,
        t_final=args.tfinal,
        record_interval=interval,
    )


def _cmd_run(args) -> int:
    config = _config(args, args.scheme, record_default=10)
    out = args.out or Path(f"errors_{args.scheme}.csv")
    try:
        series = run_simulation(config)
    except BlowUpError as exc:
        if exc.series is not None:
            write_error_csv(out, exc.series)
        print(f"blow-up at t = {exc.time:.6g}; partial series in {out}",
              file=sys.stderr)
        return 2
    write_error_csv(out, series)
    print(f"wrote {out} ({len(series)} samples)")
    return 0


def _cmd_compare(args) -> int:
    schemes = args.scheme or ["ader", "lw-d2"]
    if len(schemes) != 2:
        raise ConfigError("compare needs exactly two --scheme flags")
    config_a = _config(args, schemes[0], record_default=1)
    config_b = dataclasses.replace(config_a, scheme=_SCHEMES[schemes[1]])
    out = args.out or Path(f"diff_{schemes[0]}_vs_{schemes[1]}.csv")
    try:
        diff, errors_a, errors_b = compare_schemes_detailed(config_a, config_b)
    except BlowUpError as exc:
        if exc.series is not None:
            write_diff_csv(out, exc.series)
        print(f"blow-up at t = {exc.time:.6g}; partial series in {out}",
              file=sys.stderr)
        return 2
    write_diff_csv(out, diff)
    paths = [out]
    for scheme, errors in ((schemes[0], errors_a), (schemes[1], errors_b)):
        path = out.with_name(out.stem + f"_errors_{scheme}" + out.suffix)
        write_error_csv(path, errors)
        paths.append(path)
    print(f"max linf diff = {diff.max_diff():.3e}")
    print("wrote " + ", ".join(str(p) for p in paths))
    return 0


def _cmd_eoc(args) -> int:
    base = _config(args, args.scheme, record_default=10**9)
    levels = [args.base_elements * 2**k for k in range(args.levels)]
    rows = eoc_study(base, levels)
    lines = ["n_elem,l2_error,order"]
    print(f"{'n_elem':>8} {'l2_error':>14} {'order':>7}")
    for row in rows:
        order = "" if row.order is None else f"{row.order:.3f}"
        print(f"{row.n_elem:>8} {row.l2_error:>14.6e} {order:>7}")
        lines.append(f"{row.n_elem},{row.l2_error:.17e},{order}")
    if args.out is not None:
        args.out.write_text("\n".join(lines) + "\n", encoding="ascii")
        print(f"wrote {args.out}")
    return 0


def _cmd_scan(args) -> int:
    template = _config(args, args.scheme, record_default=10**9)
    n = round((args.cfl_max - args.cfl_min) / args.cfl_step)
    grid = [args.cfl_min + k * args.cfl_step for k in range(n + 1)]
    schemes = ([_SCHEMES[s] for s in args.schemes]
               if args.schemes else list(Scheme))
    thresholds = stability_scan(template, grid, schemes)
    for scheme, cfl in thresholds.items():
        shown = "unstable-everywhere" if cfl is None else f"{cfl:.3f}"
        print(f"{scheme.value}: largest stable cfl_safety = {shown}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fr1d",
                     description="Single-stage flux reconstruction schemes "
                                 "for 1-D scalar conservation laws")
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="run one scheme, write an error CSV")
    _add_common(p_run)
    p_run.set_defaults(func=_cmd_run)

    p_cmp = sub.add_parser("compare",
                           help="run two schemes in lockstep, write diff CSV")
    _add_common(p_cmp, multi_scheme=True)
    p_cmp.set_defaults(func=_cmd_compare)

    p_eoc = sub.add_parser("eoc", help="refinement study")
    _add_common(p_eoc)
    p_eoc.add_argument("--base-elements", type=int, default=10)
    p_eoc.add_argument("--levels", type=int, default=4)
    p_eoc.set_defaults(func=_cmd_eoc)

    p_scan = sub.add_parser("scan", help="empirical stability thresholds")
    _add_common(p_scan)
    p_scan.add_argument("--cfl-min", type=float, default=0.1)
    p_scan.add_argument("--cfl-max", type=float, default=1.0)
    p_scan.add_argument("--cfl-step", type=float, default=0.05)
    p_scan.add_argument("--schemes", nargs="*", choices=sorted(_SCHEMES),
                        default=None)
    p_scan.set_defaults(func=_cmd_scan)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except (ConfigError, DataError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
