"""Command-line harness: ``cascode {detect,compare,bench,generate,scaling}``.

Exit status is 0 on success, 1 for usage or parameter errors and 2 for
unreadable or malformed input.
"""
from __future__ import annotations

import argparse
import io
import json
import shlex
import sys
import time
from typing import List, Optional

import numpy as np

from . import __version__
from .benchgen import (DEFAULT_P_IN, ParameterError, clique_constellation, default_p_out,
                       format_truth, gn_benchmark, karate_club)
from .centrality import betweenness
from .detect import detect
from .graph import GraphError, ParseError, format_edge_list, read_edge_list
from .greedy import greedy_modularity_partition
from .metrics import NMI_VARIANT, modularity, nmi

SCALING_BLOCK = 20
SCALING_DEGREE = 10.0
SCALING_EXTERNAL = 2.0


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _provenance(argv, seed) -> List[str]:
    return [f"cascode {__version__}",
            "command: cascode " + " ".join(shlex.quote(a) for a in argv),
            f"seed: {seed}"]


def _comment(lines) -> str:
    return "".join(f"# {line}\n" for line in lines)


def _emit(text: str, path: Optional[str], stdout) -> None:
    if path is None or path == "-":
        stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _load(args):
    if args.karate:
        return karate_club()
    if not args.input:
        raise UsageError("give --input PATH or --karate")
    try:
        return read_edge_list(args.input)
    except OSError as exc:
        raise ParseError(f"cannot read: {exc.strerror}", source=args.input) from exc


def _fmt(x: float) -> str:
    return f"{x:.6f}"


def cmd_detect(args, argv, stdout) -> None:
    g = _load(args)
    labels, _ = detect(g, args.seed)
    rows = [_comment(_provenance(argv, args.seed)), "node,community\n"]
    rows += [f"{g.name(v)},{c}\n" for v, c in enumerate(labels.tolist())]
    _emit("".join(rows), args.output, stdout)
    q = _fmt(modularity(g, labels)) if g.edge_count else "undefined"
    stdout.write(f"nodes={g.node_count} edges={g.edge_count} "
                 f"communities={labels.max() + 1} modularity={q}\n")


def compare_row(g, seed):
    if g.edge_count == 0:
        raise GraphError("modularity undefined for edgeless graph; "
                         "compare needs an input with at least one edge")
    ours, _ = detect(g, seed)
    base = greedy_modularity_partition(g)
    q_c = modularity(g, ours)
    q_g = modularity(g, base)
    return dict(nodes=g.node_count, edges=g.edge_count, q_cascode=q_c, q_greedy=q_g,
                q_delta=q_c - q_g, k_cascode=int(ours.max() + 1),
                k_greedy=int(base.max() + 1), nmi_between=nmi(ours, base))


def cmd_compare(args, argv, stdout) -> None:
    row = compare_row(_load(args), args.seed)
    out = io.StringIO()
    out.write(_comment(_provenance(argv, args.seed) + [f"nmi: {NMI_VARIANT}"]))
    if args.format == "csv":
        out.write(",".join(row) + "\n")
        out.write(",".join(_fmt(v) if isinstance(v, float) else str(v)
                           for v in row.values()) + "\n")
    else:
        width = max(map(len, row))
        for key, v in row.items():
            out.write(f"{key:<{width}}  {_fmt(v) if isinstance(v, float) else v}\n")
    _emit(out.getvalue(), args.output, stdout)


def bench_run(k, n, p_in, p_out, seed):
    """One benchmark record; wall times sit under ``timings`` only."""
    net = gn_benchmark(k, n, p_in, p_out, seed)
    g = net.graph
    t0 = time.perf_counter()
    scores = betweenness(g)
    t1 = time.perf_counter()
    ours, _ = detect(g, seed, scores=scores)
    t2 = time.perf_counter()
    base = greedy_modularity_partition(g) if g.edge_count else np.arange(g.node_count)
    t3 = time.perf_counter()
    rec = dict(seed=seed, nodes=g.node_count, edges=g.edge_count,
               k_cascode=int(ours.max() + 1), k_greedy=int(base.max() + 1),
               q_cascode=modularity(g, ours) if g.edge_count else None,
               q_greedy=modularity(g, base) if g.edge_count else None,
               nmi_cascode_vs_truth=nmi(ours, net.truth),
               nmi_greedy_vs_truth=nmi(base, net.truth))
    rec["nmi_abs_delta"] = abs(rec["nmi_cascode_vs_truth"] - rec["nmi_greedy_vs_truth"])
    rec["timings"] = dict(betweenness_seconds=t1 - t0, cascade_seconds=t2 - t1,
                          greedy_seconds=t3 - t2)
    return rec


def run_bench(k, n, p_in=DEFAULT_P_IN, p_out=None, seeds=20, base_seed=0):
    """Aggregate GN benchmark over ``seeds`` consecutive seeds from ``base_seed``."""
    if seeds < 1:
        raise ParameterError("--seeds must be >= 1")
    if p_out is None:
        p_out = default_p_out(k, n) if k >= 2 and n >= 1 else 0.0
    records = [bench_run(k, n, p_in, p_out, base_seed + i) for i in range(seeds)]
    keys = ("nmi_cascode_vs_truth", "nmi_greedy_vs_truth", "nmi_abs_delta",
            "q_cascode", "q_greedy")
    aggregate = {}
    for key in keys:
        vals = [r[key] for r in records if r[key] is not None]
        if vals:
            aggregate[key] = dict(mean=float(np.mean(vals)), std=float(np.std(vals)))
    spec = dict(generator="gn", k=k, n=n, p_in=p_in, p_out=p_out, seeds=seeds,
                base_seed=base_seed, nmi_variant=NMI_VARIANT,
                modularity="newman-girvan", betweenness="unnormalised, unordered pairs")
    return dict(spec=spec, aggregate=aggregate, runs=records)


def read_bench_result(text: str) -> dict:
    """Parse a bench result file (comment header followed by JSON)."""
    body = "".join(line for line in text.splitlines(True) if not line.startswith("#"))
    return json.loads(body)


def cmd_bench(args, argv, stdout) -> None:
    result = run_bench(args.k, args.n, args.p_in, args.p_out, args.seeds, args.seed)
    text = _comment(_provenance(argv, args.seed)) + json.dumps(result, indent=2) + "\n"
    _emit(text, args.output, stdout)
    agg = result["aggregate"]
    stdout.write(f"k={args.k} n={args.n} seeds={args.seeds} "
                 f"nmi_cascode={_fmt(agg['nmi_cascode_vs_truth']['mean'])} "
                 f"nmi_greedy={_fmt(agg['nmi_greedy_vs_truth']['mean'])} "
                 f"mean_abs_delta_nmi={_fmt(agg['nmi_abs_delta']['mean'])}\n")


def cmd_generate(args, argv, stdout) -> None:
    if args.generator == "gn":
        net = gn_benchmark(args.k, args.n, args.p_in, args.p_out, args.seed)
    else:
        net = clique_constellation(args.k, args.n, args.wiring, args.seed)
    header = _provenance(argv, args.seed) + [
        "params: " + json.dumps(net.params, sort_keys=True)]
    if args.output is None:
        raise UsageError("generate needs --output PATH")
    with open(args.output, "w", encoding="utf-8") as fh:
        fh.write(format_edge_list(net.graph, header))
    truth_path = args.truth or args.output + ".truth"
    with open(truth_path, "w", encoding="utf-8") as fh:
        fh.write(format_truth(net.truth, net.graph, header))
    stdout.write(f"nodes={net.graph.node_count} edges={net.graph.edge_count}\n")


def scaling_network(size, seed):
    """Sparse GN network of ``size`` nodes with mean degree 10."""
    if size % SCALING_BLOCK or size < 2 * SCALING_BLOCK:
        raise ParameterError(f"sizes must be multiples of {SCALING_BLOCK} and >= "
                             f"{2 * SCALING_BLOCK}, got {size}")
    k = size // SCALING_BLOCK
    p_in = (SCALING_DEGREE - SCALING_EXTERNAL) / (SCALING_BLOCK - 1)
    return gn_benchmark(k, SCALING_BLOCK, p_in, default_p_out(k, SCALING_BLOCK, SCALING_EXTERNAL),
                        seed).graph


def measure_scaling(sizes, seed=0, repeats=3, budget=1.0):
    """Time :func:`detect` end to end per size and fit log time against log |V||E|.

    Each size is timed at least once and then repeated (up to ``repeats``)
    while its cumulative time stays under ``budget`` seconds; the minimum is
    kept. Runs are strictly sequential.
    """
    if len(sizes) < 4:
        raise ParameterError("need >= 4 sizes")
    rows = []
    for size in sizes:
        g = scaling_network(size, seed)
        best = float("inf")
        spent = 0.0
        for _ in range(repeats):
            t0 = time.perf_counter()
            detect(g, seed)
            dt = time.perf_counter() - t0
            best = min(best, dt)
            spent += dt
            if spent > budget:
                break
        rows.append(dict(size=size, nodes=g.node_count, edges=g.edge_count,
                         work=g.node_count * g.edge_count, seconds=best))
    slope, _ = np.polyfit(np.log([r["work"] for r in rows]),
                          np.log([r["seconds"] for r in rows]), 1)
    return dict(rows=rows, slope=float(slope))


def cmd_scaling(args, argv, stdout) -> None:
    sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
    report = measure_scaling(sizes, args.seed, args.repeats)
    out = io.StringIO()
    out.write(_comment(_provenance(argv, args.seed)))
    out.write("nodes,edges,nodes_x_edges,seconds\n")
    for r in report["rows"]:
        out.write(f"{r['nodes']},{r['edges']},{r['work']},{r['seconds']:.6f}\n")
    out.write(f"# loglog_slope_seconds_vs_nodes_x_edges: {report['slope']:.4f}\n")
    _emit(out.getvalue(), args.output, stdout)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cascode", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"cascode {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, graph_input=True):
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--output", default=None)
        if graph_input:
            p.add_argument("--input", default=None, help="edge-list file")
            p.add_argument("--karate", action="store_true", help="use the embedded karate club")

    p = sub.add_parser("detect", help="detect communities, write node,community CSV")
    common(p)
    p.set_defaults(func=cmd_detect)

    p = sub.add_parser("compare", help="cascade vs greedy modularity on one graph")
    common(p)
    p.add_argument("--format", choices=("csv", "text"), default="text")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("bench", help="GN benchmark sweep over seeds")
    common(p, graph_input=False)
    p.add_argument("--k", type=int, required=True, help="community count")
    p.add_argument("--n", type=int, required=True, help="nodes per community")
    p.add_argument("--p-in", type=float, default=DEFAULT_P_IN)
    p.add_argument("--p-out", type=float, default=None,
                   help="default: 2 expected external links per node")
    p.add_argument("--seeds", type=int, default=20)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("generate", help="write a benchmark network and its truth file")
    common(p, graph_input=False)
    p.add_argument("--generator", choices=("gn", "cliques"), required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True, help="block or clique size")
    p.add_argument("--p-in", type=float, default=DEFAULT_P_IN)
    p.add_argument("--p-out", type=float, default=None)
    p.add_argument("--wiring", choices=("ring", "complete"), default="ring")
    p.add_argument("--truth", default=None, help="truth path (default OUTPUT.truth)")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("scaling", help="empirical run-time scaling of detect")
    common(p, graph_input=False)
    p.add_argument("--sizes", default="200,400,800,1600,3200")
    p.add_argument("--repeats", type=int, default=3)
    p.set_defaults(func=cmd_scaling)
    return parser


def main(argv=None, stdout=None, stderr=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        args.func(args, argv, stdout)
    except ParseError as exc:
        stderr.write(f"cascode: {exc}\n")
        return 2
    except (UsageError, ParameterError, GraphError, ValueError) as exc:
        stderr.write(f"cascode: {exc}\n")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
