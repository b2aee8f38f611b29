"""Command line front end.

    croissant analyze GRAPH.txt
    croissant generate --model ba --n 10 --ell 9 --seed 7 --out g.txt
    croissant boundary --n 100 --out boundary.csv [--emit-plot plot.py]
    croissant sweep --model er --seed 1 --out er.csv [--full] [--workers 4]
    croissant ingest MANIFEST.csv --threshold 0.3 --out summary.csv

Exit codes: 0 success, 2 usage or parse error, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import json
import os
import secrets
import sys
from pathlib import Path

from croissant import __version__
from croissant.errors import InputError, NumericError
from croissant.generators import ModelParams, circulant, generate, multi_star
from croissant.graph import edge_count, link_density, read_edge_list, write_edge_list
from croissant.ingest import INGEST_COLUMNS, analyze_epochs, load_epoch_sets, parse_manifest
from croissant.region import (
    BOUNDARY_COLUMNS,
    boundary_csv,
    boundary_rows,
    lower_boundary,
    normalization_constant,
    upper_boundary,
)
from croissant.spectral import complexity, spectrum
from croissant.sweep import (
    DESK_BETA_STEP,
    DESK_N,
    DESK_P_STEP,
    DESK_REPLICATES,
    DESK_WS_K,
    SWEEP_COLUMNS,
    SweepSpec,
    ba_grid,
    er_grid,
    header_comment,
    records_csv,
    run_sweep,
    ws_grid,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NUMERIC = 3

PAPER_NS = (100, 200, 300, 400)
PAPER_REPLICATES = 100
PAPER_P_STEP = 0.01

THRESHOLD_HELP = (
    "binarization threshold in [0, 1]; a pair becomes an edge when its value is "
    "strictly greater than the threshold (nudge the threshold down to emulate >=)"
)


class UsageError(InputError):
    pass


# -- output helpers -----------------------------------------------------------


def render(rows, columns, fmt: str, comment: str = "") -> str:
    rows = list(rows)
    if fmt == "json":
        return "".join(json.dumps({c: r[c] for c in columns}) + "\n" for r in rows)
    return records_csv(rows, columns, comment)


def _write_text(path, text: str) -> None:
    path = Path(path)
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except BaseException:
        path.unlink(missing_ok=True)
        raise


def _emit(text: str, out) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        _write_text(out, text)


def _seed(args) -> int:
    if args.seed is not None:
        if not 0 <= args.seed < 2 ** 64:
            raise UsageError("--seed must be a 64-bit unsigned integer")
        return args.seed
    seed = secrets.randbits(64)
    print(f"seed={seed}", file=sys.stderr)
    return seed


# -- plot scripts -------------------------------------------------------------


_BOUNDARY_PLOT = '''\
"""Plot croissant boundaries from {csv_name} (generated by croissant {version})."""
import csv
import os

import matplotlib.pyplot as plt

HERE = os.path.dirname(os.path.abspath(__file__))
CSV_PATH = os.path.join(HERE, {csv_rel!r})

lines = {{"upper": ([], []), "lower": ([], [])}}
with open(CSV_PATH) as fh:
    for row in csv.DictReader(fh):
        lines[row["kind"]][0].append(float(row["rho"]))
        lines[row["kind"]][1].append(float(row["c_norm"]))

fig, ax = plt.subplots(figsize=(6, 4.5))
for kind, (rho, c) in lines.items():
    ax.plot(rho, c, "k-" if kind == "upper" else "k--", label=kind)
ax.set_xlim(0, 1)
ax.set_ylim(0, 1.05)
ax.set_xlabel("link density")
ax.set_ylabel("normalized complexity")
ax.set_title("n = {n}")
ax.legend()
fig.savefig(os.path.splitext(os.path.abspath(__file__))[0] + ".png", dpi=150)
'''


_SWEEP_PLOT = '''\
"""Plot sweep points from {csv_name} over the croissant boundaries (generated by croissant {version})."""
import csv
import os

import matplotlib.pyplot as plt

HERE = os.path.dirname(os.path.abspath(__file__))
CSV_PATH = os.path.join(HERE, {csv_rel!r})

# normalized boundary polylines per n: (rho, c_norm)
BOUNDARIES = {boundaries!r}

series = {{}}
with open(CSV_PATH) as fh:
    rows = [line for line in fh if not line.startswith("#")]
for row in csv.DictReader(rows):
    series.setdefault(int(row["n"]), []).append(row)

fig, ax = plt.subplots(figsize=(7, 5))
for n, bounds in sorted(BOUNDARIES.items()):
    ax.plot(*bounds["upper"], "-", color="0.4", lw=0.8)
    ax.plot(*bounds["lower"], "--", color="0.4", lw=0.8)
for n, rows in sorted(series.items()):
    ax.errorbar(
        [float(r["rho_mean"]) for r in rows],
        [float(r["c_norm_mean"]) for r in rows],
        xerr=[float(r["rho_std"]) for r in rows],
        yerr=[float(r["c_norm_std"]) for r in rows],
        fmt="o", ms=3, capsize=1.5, label=f"n = {{n}}",
    )
ax.set_xlim(0, 1)
ax.set_ylim(0, 1.05)
ax.set_xlabel("link density")
ax.set_ylabel("normalized complexity")
ax.set_title({title!r})
ax.legend()
fig.savefig(os.path.splitext(os.path.abspath(__file__))[0] + ".png", dpi=150)
'''


def _relative(target, script) -> str:
    return os.path.relpath(os.path.abspath(target), os.path.dirname(os.path.abspath(script)))


def boundary_plot_script(n: int, csv_path, script_path) -> str:
    return _BOUNDARY_PLOT.format(
        csv_name=Path(csv_path).name, csv_rel=_relative(csv_path, script_path), n=n, version=__version__
    )


def sweep_plot_script(ns, csv_path, script_path, title: str) -> str:
    boundaries = {}
    for n in sorted(set(ns)):
        boundaries[n] = {
            line.kind: ([pt.rho for pt in line.points], [pt.c_norm for pt in line.points])
            for line in (upper_boundary(n), lower_boundary(n))
        }
    return _SWEEP_PLOT.format(
        csv_name=Path(csv_path).name, csv_rel=_relative(csv_path, script_path),
        boundaries=boundaries, title=title, version=__version__,
    )


# -- subcommands --------------------------------------------------------------


ANALYZE_COLUMNS = ("n", "m", "rho", "c_raw", "c_norm", "spectrum")


def cmd_analyze(args) -> int:
    g = read_edge_list(args.input)
    if g.n < 2:
        raise UsageError("analysis needs a graph with at least two nodes")
    spec = spectrum(g)
    c = complexity(spec)
    row = {
        "n": g.n,
        "m": edge_count(g),
        "rho": link_density(g),
        "c_raw": c,
        "c_norm": c / normalization_constant(g.n) if g.n >= 3 else None,
        "spectrum": " ".join(repr(float(v)) for v in spec.values),
    }
    _emit(render([row], ANALYZE_COLUMNS, args.format), args.out)
    return EXIT_OK


GENERATE_COLUMNS = ("model", "n", "p", "k", "beta", "ell", "seed", "m", "rho", "c_raw", "c_norm")

_MODEL_FLAGS = {
    "er": ("p",), "ws": ("k", "beta"), "ba": ("ell",),
    "multistar": ("k",), "circulant": ("k",),
}


def _check_model_flags(args, model: str) -> None:
    needed = _MODEL_FLAGS[model]
    for name in ("p", "k", "beta", "ell"):
        value = getattr(args, name)
        if name in needed and value is None:
            raise UsageError(f"--model {model} requires --{name}")
        if name not in needed and value is not None:
            raise UsageError(f"--{name} does not apply to --model {model}")


def cmd_generate(args) -> int:
    _check_model_flags(args, args.model)
    seed = None
    if args.model == "multistar":
        g = multi_star(args.n, args.k)
    elif args.model == "circulant":
        g = circulant(args.n, args.k)
    else:
        params = ModelParams(args.model, args.n, p=args.p, k=args.k, beta=args.beta, ell=args.ell)
        seed = _seed(args)
        g = generate(params, seed)
    write_edge_list(g, args.out)
    c = complexity(spectrum(g)) if g.n >= 2 else 0.0
    row = {
        "model": args.model, "n": g.n, "p": args.p, "k": args.k, "beta": args.beta, "ell": args.ell,
        "seed": seed, "m": edge_count(g), "rho": link_density(g), "c_raw": c,
        "c_norm": c / normalization_constant(g.n) if g.n >= 3 else None,
    }
    sys.stdout.write(render([row], GENERATE_COLUMNS, args.format))
    return EXIT_OK


def cmd_boundary(args) -> int:
    if args.n < 3:
        raise UsageError("--n must be at least 3")
    if args.format == "csv":
        text = boundary_csv(args.n)
    else:
        text = render(boundary_rows(args.n), BOUNDARY_COLUMNS, "json")
    _write_text(args.out, text)
    if args.emit_plot:
        _write_text(args.emit_plot, boundary_plot_script(args.n, args.out, args.emit_plot))
    return EXIT_OK


def _sweep_grid(args):
    full = args.full
    ns = args.n or (list(PAPER_NS) if full else [DESK_N])
    if any(n < 3 for n in ns):
        raise UsageError("--n values must be at least 3")
    if args.model == "er":
        step = args.p_step if args.p_step is not None else (PAPER_P_STEP if full else DESK_P_STEP)
        grid = er_grid(ns, step)
    elif args.model == "ws":
        ks = args.k if args.k is not None else (None if full else DESK_WS_K)
        grid = ws_grid(ns, ks, args.beta_step if args.beta_step is not None else DESK_BETA_STEP)
    else:
        ells = args.ell
        if ells is None and full:
            grid = [ModelParams("ba", n, ell=e) for n in ns for e in range(1, n)]
        else:
            grid = ba_grid(ns, ells)
    if not grid:
        raise UsageError("the requested sweep grid is empty")
    return ns, grid


def cmd_sweep(args) -> int:
    if args.model != "er" and args.p_step is not None:
        raise UsageError("--p-step applies to --model er only")
    if args.model != "ws" and (args.beta_step is not None or args.k is not None):
        raise UsageError("--beta-step/--k apply to --model ws only")
    if args.model != "ba" and args.ell is not None:
        raise UsageError("--ell applies to --model ba only")
    replicates = args.replicates
    if replicates is None:
        replicates = PAPER_REPLICATES if args.full else DESK_REPLICATES
    ns, grid = _sweep_grid(args)
    seed = _seed(args)
    spec = SweepSpec(tuple(grid), replicates, seed)
    records = run_sweep(spec, workers=args.workers)
    rows = [r.row() for r in records]
    _write_text(args.out, render(rows, SWEEP_COLUMNS, args.format, header_comment(seed, __version__)))
    if args.emit_plot:
        title = f"{args.model.upper()} sweep, {replicates} replicates"
        _write_text(args.emit_plot, sweep_plot_script(ns, args.out, args.emit_plot, title))
    return EXIT_OK


def cmd_ingest(args) -> int:
    if args.threshold is not None and not 0.0 <= args.threshold <= 1.0:
        raise UsageError("--threshold must lie in [0, 1]")
    manifest = Path(args.manifest)
    with open(manifest, encoding="utf-8") as fh:
        entries = parse_manifest(fh.read(), base_dir=manifest.parent, source=str(manifest))
    if args.threshold is None and any(e.threshold is None for e in entries):
        raise UsageError("--threshold is required unless every manifest record carries one")
    summaries = [analyze_epochs(s, args.threshold) for s in load_epoch_sets(entries)]
    _emit(render([s.row() for s in summaries], INGEST_COLUMNS, args.format), args.out)
    return EXIT_OK


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="croissant",
        description="Spectral complexity of graphs and the croissant region.",
    )
    parser.add_argument("--version", action="version", version=f"croissant {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("csv", "json"), default="csv",
                       help="csv (default) or line-delimited json records")

    p = sub.add_parser("analyze", help="density, spectrum and complexity of an edge-list graph")
    p.add_argument("input", help="edge-list file: header 'n <count>' then one 'i j' pair per line")
    p.add_argument("--out", help="output file (default: stdout)")
    add_format(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("generate", help="generate a graph, write its edge list, print its plane point")
    p.add_argument("--model", required=True, choices=sorted(_MODEL_FLAGS))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, help="ER linking probability")
    p.add_argument("--k", type=int, help="WS rings per side, multistar hubs, circulant rings")
    p.add_argument("--beta", type=float, help="WS rewiring probability")
    p.add_argument("--ell", type=int, help="BA attachment parameter")
    p.add_argument("--seed", type=int, help="64-bit seed (random models; generated and printed if absent)")
    p.add_argument("--out", required=True, help="edge-list output path")
    add_format(p)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("boundary", help="upper and lower croissant polylines")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", required=True, help="CSV (or json) output path")
    p.add_argument("--emit-plot", metavar="SCRIPT", help="also write a matplotlib script here")
    add_format(p)
    p.set_defaults(func=cmd_boundary)

    p = sub.add_parser("sweep", help="replicate ensembles over a model parameter grid")
    p.add_argument("--model", required=True, choices=("er", "ws", "ba"))
    p.add_argument("--n", type=int, nargs="+", help=f"node counts (default {DESK_N}; --full: 100 200 300 400)")
    p.add_argument("--replicates", type=int, help=f"graphs per grid point (default {DESK_REPLICATES}; --full: 100)")
    p.add_argument("--p-step", type=float, help=f"ER p grid step (default {DESK_P_STEP}; --full: 0.01)")
    p.add_argument("--beta-step", type=float, help=f"WS beta grid step (default {DESK_BETA_STEP})")
    p.add_argument("--k", type=int, nargs="+", help="WS ring counts (default 1 2 5 10 25 49; --full: all)")
    p.add_argument("--ell", type=int, nargs="+", help="BA attachment values (default ~40 points; --full: all)")
    p.add_argument("--full", action="store_true", help="paper-sized grids (hours of compute)")
    p.add_argument("--seed", type=int, help="base seed (generated and printed if absent)")
    p.add_argument("--workers", type=int, default=1, help="worker processes (output is identical)")
    p.add_argument("--out", required=True)
    p.add_argument("--emit-plot", metavar="SCRIPT", help="also write a matplotlib script here")
    add_format(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("ingest", help="summarize thresholded connectivity-matrix epochs")
    p.add_argument("manifest", help="CSV records 'path,label[,threshold]', paths relative to the manifest")
    p.add_argument("--threshold", type=float, help=THRESHOLD_HELP)
    p.add_argument("--out", help="output file (default: stdout)")
    add_format(p)
    p.set_defaults(func=cmd_ingest)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NumericError as err:
        print(f"croissant: numerical failure: {err}", file=sys.stderr)
        return EXIT_NUMERIC
    except (InputError, OSError) as err:
        print(f"croissant: error: {err}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
