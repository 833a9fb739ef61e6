"""Command-line entry point wiring the modules into reproducible experiments.

Subcommands: convert, stats, gen-rr, seeds, evaluate, bench. Every command is
deterministic given (input, flags, --seed); outputs are CSV with a header row,
written to --output or stdout. Exit codes: 0 success, 1 usage error, 2 data
error, 3 internal error.
"""

from __future__ import annotations

import argparse
import contextlib
import sys
import time
import traceback
from pathlib import Path

from .bounds import run_brr
from .cascade import CascadeConfig, estimate_spread
from .greedy import select_seeds
from .hypergraph import (EmptyInputError, Hypergraph, HypergraphFormatError,
                         clique_expand, dump_edge_list, import_benson,
                         load_edge_list, stats)
from .layering import LayerCache
from .sampler import generate_collection

ALGOS = ("hyperim", "hyperim-brr", "subsim", "naive")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _add_io(p):
    p.add_argument("--input", required=True, help="edge-list path, or Benson file prefix")
    p.add_argument("--format", choices=("edge-list", "benson"), default="edge-list")
    p.add_argument("--output", default=None, help="output path (default: stdout)")


def _add_run_params(p):
    p.add_argument("--k", default="10", help="seed-set size; bench accepts a comma list")
    p.add_argument("--epsilon", type=float, default=0.01)
    p.add_argument("--delta", type=float, default=None, help="failure budget (default: 1/|V|)")
    p.add_argument("--model", choices=("ic", "lt"), default="ic")
    p.add_argument("--seed", type=int, default=0, help="master seed (non-negative)")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--runs", type=int, default=10_000, help="Monte-Carlo runs for evaluate")
    p.add_argument("--theta", type=int, default=10_000,
                   help="RR sets for the fixed-budget algorithms")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hyperim", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    _add_io(sub.add_parser("convert", help="rewrite input as a canonical edge list"))
    _add_io(sub.add_parser("stats", help="dataset statistics as CSV"))

    p = sub.add_parser("gen-rr", help="generate RR sets and report draw counters")
    _add_io(p)
    _add_run_params(p)
    p.add_argument("--algo", choices=("hyperim", "subsim", "naive"), default="hyperim")

    p = sub.add_parser("seeds", help="select a seed set")
    _add_io(p)
    _add_run_params(p)
    p.add_argument("--algo", choices=ALGOS, default="hyperim")

    p = sub.add_parser("evaluate", help="Monte-Carlo spread of a selected seed set")
    _add_io(p)
    _add_run_params(p)
    p.add_argument("--algo", choices=ALGOS, default="hyperim")
    p.add_argument("--seeds", default=None,
                   help="comma-separated seed vertices (skips selection)")

    p = sub.add_parser("bench", help="compare algorithms across seed-set sizes")
    _add_io(p)
    _add_run_params(p)
    p.add_argument("--algo", required=True,
                   help="comma-separated list of at least two of " + "/".join(ALGOS))
    return parser


def _int_list(raw: str, flag: str) -> list[int]:
    try:
        values = [int(tok) for tok in str(raw).split(",") if tok]
    except ValueError:
        raise UsageError(f"{flag} expects integers, got {raw!r}") from None
    if not values:
        raise UsageError(f"{flag} is empty")
    return values


def _single_k(args) -> int:
    ks = _int_list(args.k, "--k")
    if len(ks) != 1:
        raise UsageError("--k takes a single value here (lists are for bench)")
    return ks[0]


def _load(args) -> Hypergraph:
    if args.format == "benson":
        prefix = args.input
        with open(prefix + "-nverts.txt", encoding="utf-8") as nverts, \
                open(prefix + "-simplices.txt", encoding="utf-8") as simplices:
            return import_benson(nverts, simplices)
    with open(args.input, encoding="utf-8") as handle:
        return load_edge_list(handle)


@contextlib.contextmanager
def _open_output(path):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="") as handle:
            yield handle


def _delta(args, n: int) -> float:
    return args.delta if args.delta is not None else 1.0 / n


def cmd_convert(args) -> int:
    hypergraph = _load(args)
    with _open_output(args.output) as out:
        dump_edge_list(hypergraph, out)
    return 0


def cmd_stats(args) -> int:
    hypergraph = _load(args)
    graph = clique_expand(hypergraph)
    s = stats(hypergraph, graph)
    name = Path(args.input).name
    with _open_output(args.output) as out:
        out.write("dataset,vertices,hyperedges,edges,avg_deg,avg_size,theta_lstar\n")
        out.write(f"{name},{s.vertex_count},{s.hyperedge_count},{s.edge_count},"
                  f"{s.avg_degree:.6g},{s.avg_hyperedges_per_vertex:.6g},"
                  f"{s.theta_lstar:.6g}\n")
    return 0


def cmd_gen_rr(args) -> int:
    graph = clique_expand(_load(args))
    start = time.perf_counter()
    collection = generate_collection(graph, args.theta, args.algo, args.seed,
                                     model=args.model, workers=args.workers)
    wall_ms = 1000.0 * (time.perf_counter() - start)
    c = collection.counters
    total_members = sum(len(rr.members) for rr in collection.sets)
    with _open_output(args.output) as out:
        out.write("algo,theta,total_members,size_draws,selection_draws,"
                  "bernoulli_draws,geometric_draws,wall_ms\n")
        out.write(f"{args.algo},{args.theta},{total_members},{c.size_draws},"
                  f"{c.selection_draws},{c.bernoulli_draws},{c.geometric_draws},"
                  f"{wall_ms:.3f}\n")
    return 0


def _run_pipeline(graph, args, algo: str, k: int):
    layers = LayerCache(graph)
    if algo == "hyperim-brr":
        result = run_brr(graph, k, args.epsilon, _delta(args, graph.vertex_count),
                         args.seed, model=args.model, workers=args.workers, layers=layers)
    else:
        collection = generate_collection(graph, args.theta, algo, args.seed,
                                         model=args.model, workers=args.workers,
                                         layers=layers)
        result = select_seeds(collection, k)
    return result, layers


def cmd_seeds(args) -> int:
    graph = clique_expand(_load(args))
    result, _ = _run_pipeline(graph, args, args.algo, _single_k(args))
    n = graph.vertex_count
    with _open_output(args.output) as out:
        bounds_cols = ",lower,upper,ratio" if result.bounds is not None else ""
        out.write("rank,vertex,marginal_coverage,cumulative_coverage,"
                  f"influence_estimate{bounds_cols}\n")
        previous = 0
        for rank, (v, cum) in enumerate(zip(result.seeds, result.coverage_trace), start=1):
            row = f"{rank},{v},{cum - previous},{cum},{n * cum / result.rr_count:.6f}"
            if result.bounds is not None:
                b = result.bounds
                row += f",{b.lower:.6f},{b.upper:.6f},{b.ratio:.6f}"
            out.write(row + "\n")
            previous = cum
        if result.brr_trace:
            out.write("iter,theta,coverage,lower,upper,ratio,stopped\n")
            for it in result.brr_trace:
                out.write(f"{it.index},{it.theta},{it.coverage},{it.lower:.6f},"
                          f"{it.upper:.6f},{it.ratio:.6f},{int(it.stopped)}\n")
    return 0


def cmd_evaluate(args) -> int:
    graph = clique_expand(_load(args))
    start = time.perf_counter()
    if args.seeds is not None:
        seeds = _int_list(args.seeds, "--seeds")
        layers = LayerCache(graph)
    else:
        result, layers = _run_pipeline(graph, args, args.algo, _single_k(args))
        seeds = list(result.seeds)
    config = CascadeConfig(model=args.model, runs=args.runs, seed=args.seed)
    spread = estimate_spread(graph, seeds, config, layers=layers, workers=args.workers)
    wall_ms = 1000.0 * (time.perf_counter() - start)
    with _open_output(args.output) as out:
        out.write("model,k,runs,mean_spread,stderr,wall_ms\n")
        out.write(f"{args.model},{len(seeds)},{args.runs},{spread.mean:.6f},"
                  f"{spread.stderr:.6f},{wall_ms:.3f}\n")
    return 0


def cmd_bench(args) -> int:
    algos = [a for a in args.algo.split(",") if a]
    if len(algos) < 2:
        raise UsageError("bench needs at least two --algo entries (comma-separated)")
    for algo in algos:
        if algo not in ALGOS:
            raise UsageError(f"unknown algorithm {algo!r}")
    ks = _int_list(args.k, "--k")
    graph = clique_expand(_load(args))
    rows = []
    for algo in algos:
        for k in ks:
            start = time.perf_counter()
            result, layers = _run_pipeline(graph, args, algo, k)
            config = CascadeConfig(model=args.model, runs=args.runs, seed=args.seed)
            spread = estimate_spread(graph, list(result.seeds), config, layers=layers,
                                     workers=args.workers)
            wall_ms = 1000.0 * (time.perf_counter() - start)
            c = result.counters
            rows.append(f"{algo},{k},{result.rr_count},{spread.mean:.6f},"
                        f"{spread.stderr:.6f},{c.size_draws},{c.selection_draws},"
                        f"{c.bernoulli_draws},{c.geometric_draws},{wall_ms:.3f}")
    with _open_output(args.output) as out:
        out.write("algo,k,rr_count,spread_mean,spread_stderr,size_draws,"
                  "selection_draws,bernoulli_draws,geometric_draws,wall_ms\n")
        for row in rows:
            out.write(row + "\n")
    return 0


COMMANDS = {
    "convert": cmd_convert,
    "stats": cmd_stats,
    "gen-rr": cmd_gen_rr,
    "seeds": cmd_seeds,
    "evaluate": cmd_evaluate,
    "bench": cmd_bench,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except (HypergraphFormatError, EmptyInputError, OSError) as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return 2
    except Exception:
        traceback.print_exc()
        return 3


if __name__ == "__main__":
    sys.exit(main())
