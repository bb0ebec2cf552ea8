"""Command-line frontend: solve, gen, verify and bench subcommands.

Exit codes: 0 ok, 1 broken internal invariant, 2 input error, 3 budget or
time limit exceeded.  A config file of ``key = value`` lines can preset any
flag of the chosen subcommand via ``--config``; the environment variable
``MPG_BUDGET`` presets the verify state budget only.
"""

from __future__ import annotations

import argparse
import os
import random
import statistics
import sys
import time
from pathlib import Path

from . import formats, kasi, oracle
from .core import GameGraph, induced_subgame, max_abs_weight
from .errors import (
    BudgetExceeded,
    GameError,
    InvalidSpec,
    OverflowRisk,
    ParseError,
    TimeLimitExceeded,
    ValidationError,
)
from .generators import GenSpec, generate
from .value_iteration import vi_solve

INF = kasi.INF


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _write_output(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def cmd_solve(args) -> int:
    graph = formats.parse_game(_read_input(args.input))
    if args.problem == "lwub" and args.bound is None:
        raise InvalidSpec("--bound is required when --problem lwub")
    if args.problem == "lb" and args.bound is not None:
        raise InvalidSpec("--bound only applies to --problem lwub")
    if args.algorithm == "kasi":
        if args.problem == "lb":
            res = kasi.solve_lb(graph, check=args.check, time_limit=args.time_limit)
        else:
            res = kasi.solve_lwub(graph, args.bound, check=args.check, time_limit=args.time_limit)
        values = res.lwub
        if args.emit_strategy:
            _write_output(args.emit_strategy, formats.render_strategy(res.max_strategy))
        if args.emit_witness:
            _write_output(args.emit_witness, formats.render_witness(res.min_witness))
    else:
        if args.emit_strategy or args.emit_witness:
            raise InvalidSpec("strategy and witness output need --algorithm kasi")
        bound = args.bound
        if args.problem == "lb":
            n = graph.vertex_count
            bound = (n - 1) * max_abs_weight(graph)
        values = vi_solve(graph, bound, time_limit=args.time_limit)
    _write_output(args.output, formats.render_values(values))
    return 0


def cmd_gen(args) -> int:
    spec = GenSpec(
        family=args.family,
        seed=args.seed,
        n=args.n,
        edge_factor=args.edge_factor,
        rows=args.rows,
        cols=args.cols,
        layers=args.layers,
        width=args.width,
        added_cycles=args.added_cycles,
        cycle_len=args.cycle_len,
        weight_lo=args.weight_lo,
        weight_hi=args.weight_hi,
        shift=args.shift,
        grid=args.grid,
        docks=args.docks,
        phases=args.phases,
        sites=args.sites,
        max_request=args.max_request,
        refill=args.refill,
        zones=args.zones,
        margin=args.margin,
    )
    graph = generate(spec)
    _write_output(args.output, formats.render_game(graph))
    return 0


def _verify_one(graph: GameGraph, bound: int, budget: int):
    """Returns None on agreement, else (expected, kasi, vi)."""
    want = oracle.oracle_lwub(graph, bound, budget=budget)
    got = kasi.solve_lwub(graph, bound, check=True).lwub
    via_vi = vi_solve(graph, bound)
    if want == got == via_vi:
        return None
    return want, got, via_vi


def _shrink(graph: GameGraph, bound: int, budget: int) -> GameGraph:
    # greedily delete vertices while the solvers still disagree
    current = graph
    improved = True
    while improved and current.vertex_count > 1:
        improved = False
        for v in range(current.vertex_count):
            keep = [u for u in range(current.vertex_count) if u != v]
            smaller = induced_subgame(current, keep)
            try:
                if _verify_one(smaller, bound, budget) is not None:
                    current = smaller
                    improved = True
                    break
            except GameError:
                continue
    return current


def cmd_verify(args) -> int:
    rng = random.Random(args.seed)
    budget = args.budget
    for trial in range(args.trials):
        n = rng.randint(1, args.n_max)
        spec = GenSpec(
            family="sprand",
            seed=rng.randrange(2**32),
            n=n,
            edge_factor=rng.choice([1.0, 1.5, 2.0, 3.0]),
            weight_lo=-args.w_max,
            weight_hi=args.w_max,
        )
        graph = generate(spec)
        bound = rng.randint(0, args.bound_max)
        disagreement = _verify_one(graph, bound, budget)
        if disagreement is not None:
            shrunk = _shrink(graph, bound, budget)
            print(f"disagreement at trial {trial} (bound {bound}); minimized instance:")
            sys.stdout.write(formats.render_game(shrunk))
            want, got, via_vi = _verify_one(shrunk, bound, budget) or disagreement
            print(f"oracle: {want}")
            print(f"kasi:   {got}")
            print(f"vi:     {via_vi}")
            return 1
    print(f"{args.trials}/{args.trials} agree")
    return 0


def _default_lwub_bound(path: Path, graph: GameGraph) -> int:
    """Average finite unbounded requirement halved, cached beside the file."""
    cache = path.with_suffix(path.suffix + ".bound")
    if cache.exists():
        return int(cache.read_text().strip())
    lb = kasi.solve_lb(graph).lwub
    finite = [x for x in lb if x != INF]
    bound = int(sum(finite) / len(finite) / 2) if finite else 0
    cache.write_text(f"{bound}\n")
    return bound


def _time_cell(run, repeat: int):
    """Median wall-clock seconds over repeats; None marks a timeout."""
    samples = []
    iterations = 0
    for _ in range(repeat):
        t0 = time.perf_counter()
        try:
            iterations = run()
        except TimeLimitExceeded:
            return time.perf_counter() - t0, None
        samples.append(time.perf_counter() - t0)
    return statistics.median(samples), iterations


def cmd_bench(args) -> int:
    algorithms = args.algorithms.split(",")
    problems = args.problems.split(",")
    for a in algorithms:
        if a not in ("kasi", "vi"):
            raise InvalidSpec(f"unknown algorithm {a!r}")
    for p in problems:
        if p not in ("lb", "lwub"):
            raise InvalidSpec(f"unknown problem {p!r}")
    if args.repeat < 1:
        raise InvalidSpec("--repeat must be >= 1")
    rows = []
    for name in args.instances:
        path = Path(name)
        graph = formats.parse_game(path.read_text())
        n = graph.vertex_count
        m = len(graph.edges)
        for problem in problems:
            if problem == "lb":
                bound = (n - 1) * max_abs_weight(graph)
            elif args.bound is not None:
                bound = args.bound
            else:
                bound = _default_lwub_bound(path, graph)
            for algorithm in algorithms:
                if algorithm == "kasi":
                    def run():
                        res = kasi.solve_lwub(graph, bound, time_limit=args.time_limit)
                        return res.iterations
                else:
                    def run():
                        stats: dict = {}
                        vi_solve(graph, bound, time_limit=args.time_limit, stats=stats)
                        return stats["iterations"]
                seconds, iterations = _time_cell(run, args.repeat)
                rows.append(
                    formats.render_bench_row(
                        path.stem, n, m, problem, bound, algorithm, seconds,
                        -1 if iterations is None else iterations,
                    )
                )
    rows.sort()
    _write_output(args.output, formats.BENCH_HEADER + "".join(rows))
    return 0


def _load_config(path: str) -> dict:
    mapping = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise InvalidSpec(f"config line {lineno}: expected key=value")
        key, value = (part.strip() for part in line.split("=", 1))
        key = key.replace("-", "_")
        try:
            mapping[key] = int(value)
        except ValueError:
            try:
                mapping[key] = float(value)
            except ValueError:
                mapping[key] = value
    return mapping


def build_parser():
    parser = argparse.ArgumentParser(
        prog="mpg",
        description="Solvers, generators and benchmarks for energy problems on mean-payoff games.",
    )
    parser.add_argument("--config", help="key=value file presetting flags of the subcommand")
    sub = parser.add_subparsers(dest="command", required=True)
    subparsers = {}

    p = sub.add_parser("solve", help="solve one instance")
    p.add_argument("input", help="game file, or - for standard input")
    p.add_argument("--algorithm", choices=["kasi", "vi"], default="kasi")
    p.add_argument("--problem", choices=["lb", "lwub"], default="lb")
    p.add_argument("--bound", type=int, default=None, help="truncation bound (lwub only)")
    p.add_argument("--output", default=None, help="result file (default stdout)")
    p.add_argument("--emit-strategy", default=None, help="write the optimal Max strategy here")
    p.add_argument("--emit-witness", default=None, help="write Min's strategy sequence here")
    p.add_argument("--check", action="store_true", help="enable debug invariant checking")
    p.add_argument("--time-limit", type=float, default=None)
    p.set_defaults(func=cmd_solve)
    subparsers["solve"] = p

    p = sub.add_parser("gen", help="generate an instance")
    p.add_argument("--family", required=True,
                   choices=["sprand", "torus", "layered", "collect", "supply", "taxi"])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--edge-factor", type=float, default=2.0)
    p.add_argument("--rows", type=int, default=0)
    p.add_argument("--cols", type=int, default=0)
    p.add_argument("--layers", type=int, default=0)
    p.add_argument("--width", type=int, default=0)
    p.add_argument("--added-cycles", type=int, default=0)
    p.add_argument("--cycle-len", type=int, default=8)
    p.add_argument("--weight-lo", type=int, default=1)
    p.add_argument("--weight-hi", type=int, default=10000)
    p.add_argument("--shift", type=int, default=0)
    p.add_argument("--grid", type=int, default=3)
    p.add_argument("--docks", type=int, default=1)
    p.add_argument("--phases", type=int, default=2)
    p.add_argument("--sites", type=int, default=2)
    p.add_argument("--max-request", type=int, default=2)
    p.add_argument("--refill", type=int, default=3)
    p.add_argument("--zones", type=int, default=3)
    p.add_argument("--margin", type=int, default=1)
    p.add_argument("--output", default=None)
    p.set_defaults(func=cmd_gen)
    subparsers["gen"] = p

    p = sub.add_parser("verify", help="differential-test the solvers against the oracle")
    p.add_argument("--n-max", type=int, default=7)
    p.add_argument("--trials", type=int, default=500)
    p.add_argument("--bound-max", type=int, default=10)
    p.add_argument("--w-max", type=int, default=4)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=int(os.environ.get("MPG_BUDGET", 10**6)))
    p.set_defaults(func=cmd_verify)
    subparsers["verify"] = p

    p = sub.add_parser("bench", help="time algorithms over instance files (parse time excluded)")
    p.add_argument("instances", nargs="+", help="game files")
    p.add_argument("--algorithms", default="kasi,vi")
    p.add_argument("--problems", default="lb,lwub")
    p.add_argument("--bound", type=int, default=None,
                   help="lwub bound; default is the cached half-average finite lb")
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--time-limit", type=float, default=None,
                   help="per-run limit; timed-out cells report iterations=-1")
    p.add_argument("--output", default=None)
    p.set_defaults(func=cmd_bench)
    subparsers["bench"] = p

    return parser, subparsers


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser, subparsers = build_parser()
    # apply --config before the real parse so flags still win over the file
    config_path = None
    for i, token in enumerate(argv):
        if token == "--config" and i + 1 < len(argv):
            config_path = argv[i + 1]
        elif token.startswith("--config="):
            config_path = token.split("=", 1)[1]
    try:
        if config_path is not None:
            mapping = _load_config(config_path)
            known = {
                action.dest
                for p in subparsers.values()
                for action in p._actions
            }
            unknown = set(mapping) - known
            if unknown:
                raise InvalidSpec(f"config keys not recognized: {sorted(unknown)}")
            for p in subparsers.values():
                p.set_defaults(**{k: v for k, v in mapping.items()
                                  if k in {a.dest for a in p._actions}})
        args = parser.parse_args(argv)
        return args.func(args)
    except (ParseError, ValidationError, InvalidSpec, OverflowRisk, FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (BudgetExceeded, TimeLimitExceeded) as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 3
    except GameError as exc:
        print(f"internal invariant failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
