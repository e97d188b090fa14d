"""Command-line front end: graphcurv <command> [options].

Graph sources are either a file path (edge-list text or JSON) or a
generator spec like "cycle:n=6", "erdos_renyi:n=30,q=0.2,seed=4", or
"icosahedron". Exit codes: 0 success, 1 verification failure, 2 usage or
parse error. The environment variable DISCRETE_GB_SEED overrides the
built-in default seed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from fractions import Fraction

from .cliques import count_cliques, euler_characteristic
from .corpus import base_corpus, er_corpus
from .curvature import curvature_field
from .expectation import exact_expectation_by_permutations, mc_index_expectation
from .graphs import (
    GENERATOR_KINDS,
    EdgeListParseError,
    Graph,
    generate,
    load,
    to_edge_list,
    to_json,
)
from .morse import IndexCalculator, index_report, order_from_values, random_order
from .percolation import MODES, clique_survival_integral, survival_grid
from .trials import DEFAULT_SEED, TrialPlan
from .verify import SUITES, run_suites, summarize

FORMATS = ("json", "csv", "human")


def default_seed() -> int:
    env = os.environ.get("DISCRETE_GB_SEED")
    return int(env) if env else DEFAULT_SEED


def resolve_seed(args) -> int:
    return args.seed if args.seed is not None else default_seed()


def parse_generator_spec(spec: str) -> Graph:
    """Build a graph from "kind" or "kind:key=value,..." text."""
    kind, _, rest = spec.partition(":")
    params: dict[str, str] = {}
    for item in filter(None, rest.split(",")):
        key, sep, value = item.partition("=")
        if not sep:
            raise ValueError(f"bad generator parameter {item!r}, expected key=value")
        params[key.strip()] = value.strip()
    n = int(params.pop("n")) if "n" in params else None
    q = float(params.pop("q")) if "q" in params else None
    seed = int(params.pop("seed")) if "seed" in params else 0
    if params:
        raise ValueError(f"unknown generator parameters {sorted(params)} for kind {kind!r}")
    return generate(kind, n=n, q=q, seed=seed)


def load_graph(source: str) -> Graph:
    """Path or generator spec; the kind prefix decides which."""
    kind = source.partition(":")[0]
    if kind in GENERATOR_KINDS:
        return parse_generator_spec(source)
    return load(source)


def parse_function_file(text: str, n: int) -> tuple[int, ...]:
    """Lines "v value" to a rank order; values must be injective."""
    values: dict[int, Fraction] = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {line_no}: expected 'vertex value', got {raw!r}")
        try:
            v = int(parts[0])
            value = Fraction(parts[1])
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"line {line_no}: {exc}") from None
        if v in values:
            raise ValueError(f"line {line_no}: vertex {v} assigned twice")
        values[v] = value
    missing = sorted(set(range(n)) - set(values))
    extra = sorted(set(values) - set(range(n)))
    if missing or extra:
        raise ValueError(f"function must cover vertices 0..{n - 1}: missing {missing}, extra {extra}")
    return order_from_values([values[v] for v in range(n)])


def emit(text: str, output: str | None):
    if output:
        with open(output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def to_csv(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


# ---------------------------------------------------------------- commands


def cmd_generate(args) -> int:
    G = load_graph(args.graph)
    if args.format == "json":
        emit(to_json(G) + "\n", args.output)
    elif args.format == "csv":
        emit(to_csv(["u", "v"], [[u, v] for u, v in G.edges]), args.output)
    else:
        emit(to_edge_list(G), args.output)
    return 0


def chi_by_cliques(G: Graph, progress=None) -> int:
    return euler_characteristic(count_cliques(G, progress=progress, progress_interval=100_000))


def chi_by_curvature(G: Graph) -> int:
    total = curvature_field(G).total
    if total.denominator != 1:
        raise AssertionError(f"total curvature {total} is not an integer")
    return int(total)


def chi_by_index(G: Graph, seed: int, deadline=None) -> int:
    calc = IndexCalculator(G)
    order = random_order(G.n, seed)
    total = 0
    for x in range(G.n):
        if deadline is not None:
            deadline.check()
        total += calc.index(order, x)
    return total


def cmd_chi(args) -> int:
    G = load_graph(args.graph)
    seed = resolve_seed(args)
    start = time.perf_counter()
    if args.method == "cliques":
        chi = chi_by_cliques(G)
    elif args.method == "curvature":
        chi = chi_by_curvature(G)
    else:
        chi = chi_by_index(G, seed)
    millis = (time.perf_counter() - start) * 1000.0
    if args.format == "json":
        emit(dumps({"method": args.method, "chi": chi, "millis": round(millis, 3)}), args.output)
    elif args.format == "csv":
        emit(to_csv(["method", "chi", "millis"], [[args.method, chi, f"{millis:.3f}"]]), args.output)
    else:
        emit(f"chi = {chi}  (method={args.method}, {millis:.1f} ms)\n", args.output)
    return 0


def cmd_curvature(args) -> int:
    G = load_graph(args.graph)
    field = curvature_field(G)
    if args.format == "json":
        emit(dumps(field.to_json_dict()), args.output)
    elif args.format == "csv":
        rows = [[x, str(K)] for x, K in enumerate(field.values)]
        emit(to_csv(["vertex", "curvature"], rows), args.output)
    else:
        lines = [f"{x:>6}  {K}" for x, K in enumerate(field.values)]
        emit("vertex  curvature\n" + "\n".join(lines) + f"\ntotal = {field.total}\n", args.output)
    return 0


def cmd_index(args) -> int:
    G = load_graph(args.graph)
    if args.function:
        with open(args.function) as fh:
            order = parse_function_file(fh.read(), G.n)
    else:
        order = random_order(G.n, resolve_seed(args))
    report = index_report(G, order)
    if args.format == "json":
        emit(dumps(report.to_json_dict()), args.output)
    elif args.format == "csv":
        rows = [
            [x, report.order[x], report.indices[x], report.reverse_indices[x], str(report.symmetric[x])]
            for x in range(G.n)
        ]
        emit(to_csv(["vertex", "rank", "i", "i_reversed", "j"], rows), args.output)
    else:
        lines = [
            f"{x:>6}  {report.order[x]:>4}  {report.indices[x]:>3}  {str(report.symmetric[x]):>6}"
            for x in range(G.n)
        ]
        emit(
            "vertex  rank    i       j\n"
            + "\n".join(lines)
            + f"\nindex sum = {report.index_sum}, symmetric sum = {report.symmetric_sum}\n",
            args.output,
        )
    return 0


def cmd_expectation(args) -> int:
    G = load_graph(args.graph)
    seed = resolve_seed(args)
    plan = TrialPlan(samples=args.samples, master_seed=seed, workers=args.threads)
    report = mc_index_expectation(G, plan, with_exact=args.exact, exact_degree_cap=args.degree_cap)
    payload = report.to_json_dict()
    if args.permutation_oracle:
        oracle = exact_expectation_by_permutations(G)
        for row, val in zip(payload["rows"], oracle):
            row["permutation_oracle"] = str(val)
    if args.format == "json":
        emit(dumps(payload), args.output)
    elif args.format == "csv":
        header = ["vertex", "samples", "estimate", "stderr", "exact", "curvature"]
        if args.permutation_oracle:
            header.append("permutation_oracle")
        rows = []
        for row in payload["rows"]:
            out = [row["vertex"], row["samples"], row["estimate"], row["stderr"], row.get("exact", ""), row["curvature"]]
            if args.permutation_oracle:
                out.append(row["permutation_oracle"])
            rows.append(out)
        emit(to_csv(header, rows), args.output)
    else:
        lines = ["vertex  estimate    stderr      curvature"]
        for row in payload["rows"]:
            se = "n/a" if row["stderr"] is None else f"{row['stderr']:.6f}"
            lines.append(f"{row['vertex']:>6}  {row['estimate']:>9.6f}  {se:>9}  {row['curvature']:>9}")
        emit("\n".join(lines) + f"\nsamples = {args.samples}, seed = {seed}\n", args.output)
    return 0


def cmd_percolation(args) -> int:
    G = load_graph(args.graph)
    seed = resolve_seed(args)
    if args.grid:
        points = [(i + 0.5) / args.grid for i in range(args.grid)]
        rows = survival_grid(
            G, args.k, args.trials, seed=seed, mode=args.mode, grid=points, workers=args.threads
        )
        payload = {
            "mode": args.mode,
            "k": args.k,
            "trials": args.trials,
            "master_seed": seed,
            "rows": [
                {**r, "exact": str(r["exact"]) if isinstance(r["exact"], Fraction) else r["exact"]}
                for r in rows
            ],
        }
        if args.format == "json":
            emit(dumps(payload), args.output)
        elif args.format == "csv":
            emit(
                to_csv(
                    ["p", "ratio", "stderr", "exact"],
                    [[r["p"], r["ratio"], r["stderr"], r["exact"]] for r in payload["rows"]],
                ),
                args.output,
            )
        else:
            lines = [f"{r['p']:>6.3f}  {r['ratio']:>9.6f}  {r['exact']}" for r in payload["rows"]]
            emit("     p      ratio  exact\n" + "\n".join(lines) + "\n", args.output)
        return 0
    report = clique_survival_integral(
        G,
        args.k,
        args.trials,
        seed=seed,
        mode=args.mode,
        workers=args.threads,
        fixed_p=args.fixed_p,
        row_limit=args.rows,
    )
    if args.format == "json":
        emit(dumps(report.to_json_dict()), args.output)
    elif args.format == "csv":
        body = to_csv(
            ["trial", "p", "ratio"],
            [[r["trial"], r.get("p", args.fixed_p), r["ratio"]] for r in report.rows],
        )
        s = report.summary
        exact = s.exact if not isinstance(s.exact, Fraction) else str(s.exact)
        body += f"# summary mode={s.mode} k={s.k} trials={s.trials} estimate={s.estimate} stderr={s.stderr} exact={exact}\n"
        emit(body, args.output)
    else:
        s = report.summary
        se = "n/a" if s.stderr is None else f"{s.stderr:.6f}"
        emit(
            f"mode={s.mode} k={s.k} trials={s.trials} hosts v_k={s.host_count}\n"
            f"estimate = {s.estimate:.6f}, stderr = {se}, exact = {s.exact}\n",
            args.output,
        )
    return 0


def cmd_verify(args) -> int:
    if args.graph:
        graphs = [(args.graph, load_graph(args.graph))]
    else:
        graphs = list(base_corpus() + er_corpus(20))
    suites = SUITES if args.suite == "all" else (args.suite,)
    results = run_suites(graphs, suites=suites, seed=resolve_seed(args), degree_cap=args.degree_cap)
    summary = summarize(results)
    if args.format == "json":
        emit(dumps({"results": [r.to_json_dict() for r in results], "summary": summary}), args.output)
    elif args.format == "csv":
        rows = [[r.suite, r.name, r.status, r.detail] for r in results]
        emit(to_csv(["suite", "name", "status", "detail"], rows), args.output)
    else:
        lines = [f"{r.status:<4}  {r.suite:<13} {r.name}  {r.detail}" for r in results]
        lines.append(
            f"{summary['passed']} passed, {summary['failed']} failed, {summary['skipped']} skipped"
        )
        emit("\n".join(lines) + "\n", args.output)
    return 0 if summary["ok"] else 1


class _BenchTimeout(Exception):
    pass


class _Deadline:
    def __init__(self, budget_ms: float):
        self.t_end = time.perf_counter() + budget_ms / 1000.0

    def check(self, *_ignored):
        if time.perf_counter() > self.t_end:
            raise _BenchTimeout


def cmd_bench(args) -> int:
    seeds = [int(s) for s in args.seeds.split(",")]
    rows = []
    chis: dict[int, set[int]] = {}
    for seed in seeds:
        G = generate("erdos_renyi", n=args.n, q=args.q, seed=seed)
        for method in ("cliques", "curvature", "index"):
            for _ in range(args.repetitions):
                deadline = _Deadline(args.budget_ms)
                start = time.perf_counter()
                try:
                    if method == "cliques":
                        chi = chi_by_cliques(G, progress=deadline.check)
                    elif method == "curvature":
                        chi = chi_by_curvature(G)
                    else:
                        chi = chi_by_index(G, seed, deadline=deadline)
                    millis = f"{(time.perf_counter() - start) * 1000.0:.3f}"
                    chis.setdefault(seed, set()).add(chi)
                except _BenchTimeout:
                    millis = "timeout"
                rows.append([method, args.n, args.q, seed, millis])
    disagree = {s: v for s, v in chis.items() if len(v) > 1}
    if disagree:
        raise AssertionError(f"chi routes disagree: {disagree}")
    if args.format == "json":
        emit(
            dumps([
                {"method": m, "n": n, "q": q, "seed": s, "millis": ms}
                for m, n, q, s, ms in rows
            ]),
            args.output,
        )
    elif args.format == "human":
        lines = [f"{m:<10} n={n} q={q} seed={s}  {ms} ms" for m, n, q, s, ms in rows]
        emit("\n".join(lines) + "\n", args.output)
    else:
        emit(to_csv(["method", "n", "q", "seed", "millis"], rows), args.output)
    return 0


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphcurv",
        description="Discrete curvature, Poincare-Hopf indices, Euler characteristics, and percolation checks on finite simple graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, seed=True, threads=False, default_format="human"):
        p.add_argument("--format", choices=FORMATS, default=default_format)
        p.add_argument("--output", help="write output to a file instead of stdout")
        if seed:
            p.add_argument("--seed", type=int, default=None, help="override DISCRETE_GB_SEED / built-in default")
        if threads:
            p.add_argument("--threads", type=int, default=os.cpu_count() or 1)

    p = sub.add_parser("generate", help="emit a graph as edge-list text, CSV, or JSON")
    p.add_argument("graph", help="generator spec like cycle:n=6 or erdos_renyi:n=20,q=0.3,seed=1")
    add_common(p, seed=False)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("chi", help="Euler characteristic by cliques, curvature, or index route")
    p.add_argument("graph")
    p.add_argument("--method", choices=("cliques", "curvature", "index"), default="cliques")
    add_common(p)
    p.set_defaults(func=cmd_chi)

    p = sub.add_parser("curvature", help="per-vertex curvature and the Gauss-Bonnet total")
    p.add_argument("graph")
    add_common(p, seed=False)
    p.set_defaults(func=cmd_curvature)

    p = sub.add_parser("index", help="per-vertex indices of one injective function")
    p.add_argument("graph")
    p.add_argument("--function", help="file of 'vertex value' lines; values must be injective")
    p.add_argument("--random-order", action="store_true", help="draw the order from the seed (default)")
    add_common(p)
    p.set_defaults(func=cmd_index)

    p = sub.add_parser("expectation", help="Monte Carlo / exact E[index] per vertex vs curvature")
    p.add_argument("graph")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--exact", action="store_true", help="attach the exact expectation where degree permits")
    p.add_argument("--permutation-oracle", action="store_true", help="attach the all-orders oracle (n <= 8)")
    p.add_argument("--degree-cap", type=int, default=20)
    add_common(p, threads=True)
    p.set_defaults(func=cmd_expectation)

    p = sub.add_parser("percolation", help="clique survival under site/bond decimation")
    p.add_argument("graph")
    p.add_argument("--k", type=int, required=True, help="clique dimension (k-simplices = (k+1)-cliques)")
    p.add_argument("--trials", type=int, default=10000)
    p.add_argument("--mode", choices=MODES, default="site")
    p.add_argument("--fixed-p", type=float, default=None, help="fix p instead of drawing it per trial")
    p.add_argument("--grid", type=int, default=None, help="stratified sweep over this many p midpoints")
    p.add_argument("--rows", type=int, default=0, help="include this many per-trial rows in the output")
    add_common(p, threads=True)
    p.set_defaults(func=cmd_percolation)

    p = sub.add_parser("verify", help="run identity suites on a graph or the built-in corpus")
    p.add_argument("graph", nargs="?", help="graph source; omit to use the built-in corpus")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--degree-cap", type=int, default=16)
    add_common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="time the chi routes on Erdos-Renyi graphs")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=float, default=0.1)
    p.add_argument("--seeds", default="0", help="comma-separated generator seeds")
    p.add_argument("--repetitions", type=int, default=1)
    p.add_argument("--budget-ms", type=float, default=60000.0, help="per-run budget; slower runs emit a timeout row")
    add_common(p, seed=False, default_format="csv")
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BrokenPipeError:
        return 0
    except AssertionError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 1
    except (
        EdgeListParseError,
        ValueError,
        OSError,
        json.JSONDecodeError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
