"""Benchmark command line: generate instances, run engines, verify, emit stats.

Subcommands:
  generate   build an instance from generator flags and write it as DIMACS .gr
  run        run one engine over a seed batch, emit per-trial records
  verify     run every engine against the exact oracle and report mismatches

Exit codes: 0 success, 1 verification failure, 2 malformed input,
3 negative cycle detected under --fail-on-cycle.  Records are emitted in seed
order and are deterministic for identical inputs except for wall_time_ns.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import math
import sys
import time
from dataclasses import asdict, dataclass, fields
from io import StringIO
from pathlib import Path
from typing import List, Optional, Sequence

from .dimacs import DimacsFormatError, load_dimacs, write_dimacs
from .engines import run_adaptive, run_basic, run_randomized, run_yen
from .generators import KINDS, GeneratorSpec, adversarial_ordering, build_graph
from .graph import Graph, identity_ordering, random_ordering
from .negcycle import run_with_detection
from .oracle import ORACLE_CAP, OracleResult, floyd_warshall

ALGORITHMS = ("basic", "adaptive", "yen", "randomized")
ORDERINGS = ("identity", "random", "adversarial")
FORMATS = ("csv", "json-lines")


class OracleMismatchError(Exception):
    """A trial's result disagreed with the exact oracle."""


@dataclass
class TrialConfig:
    """Everything one batch of trials needs; immutable while trials run."""

    graph: Graph
    algorithm: str
    seeds: Sequence[int]
    ordering: str = "identity"
    c: float = 2.0
    check_oracle: bool = False
    detect_cycles: bool = False
    strict_count: bool = False
    source_label: str = ""


@dataclass
class TrialRecord:
    """One completed trial; field order is the documented CSV column order."""

    algorithm: str
    seed: int
    n: int
    m: int
    iterations: int
    relax_calls: int
    improvements: int
    wall_time_ns: int
    negative_cycle_found: bool
    c: float
    source: str


CSV_HEADER = ",".join(f.name for f in fields(TrialRecord))


def _dist_matches_oracle(dist: list, oracle_row: list) -> bool:
    for d, expected in zip(dist, oracle_row):
        got = math.inf if d is None else d
        if got != expected:
            return False
    return True


def run_trials(config: TrialConfig) -> List[TrialRecord]:
    """Execute one trial per seed, in seed order.

    With ``check_oracle`` every trial is verified against the exact oracle
    and the first mismatch raises :class:`OracleMismatchError`.  Trials are
    independent; records come back in seed order regardless of how they ran.
    """
    g = config.graph
    oracle: Optional[OracleResult] = None
    if config.check_oracle:
        oracle = floyd_warshall(g)
        if oracle.has_reachable_negative_cycle and not config.detect_cycles:
            raise OracleMismatchError(
                "input has a negative cycle reachable from the source; engine distances "
                "are undefined (rerun with --detect-cycles)"
            )

    records: List[TrialRecord] = []
    for seed in config.seeds:
        start = time.perf_counter_ns()
        found_cycle = False
        if config.detect_cycles:
            state, stats, verdict = run_with_detection(g, seed, config.c)
            found_cycle = verdict.found
        elif config.algorithm == "basic":
            state, stats = run_basic(g, strict=config.strict_count)
        elif config.algorithm == "adaptive":
            state, stats = run_adaptive(g)
        elif config.algorithm == "yen":
            if config.ordering == "identity":
                ordering = identity_ordering(g)
            elif config.ordering == "random":
                ordering = random_ordering(g, seed)
            else:
                ordering = adversarial_ordering(g.n)
            state, stats = run_yen(g, ordering)
        elif config.algorithm == "randomized":
            state, stats, _ = run_randomized(g, seed)
        else:
            raise ValueError(f"unknown algorithm {config.algorithm!r}")
        wall = time.perf_counter_ns() - start

        if oracle is not None:
            if config.detect_cycles and found_cycle != oracle.has_reachable_negative_cycle:
                raise OracleMismatchError(
                    f"seed {seed}: detector said cycle={found_cycle}, oracle says "
                    f"{oracle.has_reachable_negative_cycle}"
                )
            if not found_cycle and not _dist_matches_oracle(state.dist, oracle.dist[g.source]):
                raise OracleMismatchError(
                    f"seed {seed}: {config.algorithm} distances disagree with the oracle"
                )

        records.append(TrialRecord(
            algorithm=config.algorithm,
            seed=seed,
            n=g.n,
            m=g.m,
            iterations=stats.iterations,
            relax_calls=stats.relax_calls,
            improvements=stats.improvements,
            wall_time_ns=wall,
            negative_cycle_found=found_cycle,
            c=config.c,
            source=config.source_label,
        ))
    return records


def emit_stats(records: Sequence[TrialRecord], fmt: str) -> str:
    """Serialize records as CSV (fixed header) or JSON lines (same field names)."""
    if fmt == "csv":
        out = StringIO()
        out.write(CSV_HEADER + "\n")
        for r in records:
            row = []
            for f in fields(TrialRecord):
                value = getattr(r, f.name)
                if isinstance(value, bool):
                    row.append("true" if value else "false")
                else:
                    row.append(str(value))
            out.write(",".join(row) + "\n")
        return out.getvalue()
    if fmt == "json-lines":
        return "".join(json.dumps(asdict(r)) + "\n" for r in records)
    raise ValueError(f"unknown format {fmt!r}")


def _add_graph_source_args(parser: argparse.ArgumentParser) -> None:
    src = parser.add_argument_group("graph source (file or generator)")
    src.add_argument("--input", type=Path, help="DIMACS .gr file to load")
    src.add_argument("--source", type=int, default=1,
                     help="1-based source vertex id for file input (default 1)")
    src.add_argument("--gen", choices=KINDS, help="generator kind")
    src.add_argument("--n", type=int, help="vertex count for the generator")
    src.add_argument("--m", type=int, help="edge count for random kinds")
    src.add_argument("--density", type=float, help="edge density for random kinds")
    src.add_argument("--weight-min", type=int, default=-3)
    src.add_argument("--weight-max", type=int, default=7)
    src.add_argument("--graph-seed", type=int, default=0,
                     help="seed for the instance generator (not the engine)")
    src.add_argument("--ensure-reachable", action="store_true",
                     help="add a zero-weight spanning arborescence first")
    src.add_argument("--cycle-length", type=int, help="planted cycle length")
    src.add_argument("--cycle-weight", type=int, help="planted cycle total weight (negative)")


def _resolve_graph(args: argparse.Namespace) -> tuple[Graph, str]:
    if (args.input is None) == (args.gen is None):
        raise DimacsFormatError("exactly one of --input or --gen is required")
    if args.input is not None:
        g = load_dimacs(args.input, source=args.source)
        digest = hashlib.sha256(Path(args.input).read_bytes()).hexdigest()
        return g, f"file:{args.input.name}:sha256:{digest}"
    if args.n is None:
        raise DimacsFormatError("--gen requires --n")
    spec = GeneratorSpec(
        kind=args.gen,
        n=args.n,
        m=args.m,
        density=args.density,
        weight_min=args.weight_min,
        weight_max=args.weight_max,
        seed=args.graph_seed,
        ensure_reachable=args.ensure_reachable,
        cycle_length=args.cycle_length,
        cycle_weight=args.cycle_weight,
    )
    return build_graph(spec), spec.label()


def _parse_seeds(args: argparse.Namespace) -> List[int]:
    if args.seeds is not None:
        lo, sep, hi = args.seeds.partition(":")
        if not sep:
            raise DimacsFormatError("--seeds expects a half-open range like 0:1000")
        try:
            return list(range(int(lo), int(hi)))
        except ValueError:
            raise DimacsFormatError(f"malformed seed range {args.seeds!r}") from None
    return [args.seed]


def _cmd_generate(args: argparse.Namespace) -> int:
    if args.gen is None or args.n is None:
        raise DimacsFormatError("generate requires --gen and --n")
    args.input = None  # generate never reads a file
    g, label = _resolve_graph(args)
    write_dimacs(g, args.output)
    print(f"wrote {args.output}: n={g.n} m={g.m} ({label})")
    return 0


def _cmd_run(args: argparse.Namespace) -> int:
    g, label = _resolve_graph(args)
    if args.check_oracle and g.n > ORACLE_CAP:
        raise DimacsFormatError(f"--check-oracle needs n <= {ORACLE_CAP}, graph has {g.n}")
    if args.detect_cycles and args.algorithm != "randomized":
        raise DimacsFormatError("--detect-cycles is only available with --algorithm randomized")
    if args.ordering == "adversarial" and g.source != 0:
        raise DimacsFormatError("the adversarial ordering requires source vertex 0")
    config = TrialConfig(
        graph=g,
        algorithm=args.algorithm,
        seeds=_parse_seeds(args),
        ordering=args.ordering,
        c=args.c,
        check_oracle=args.check_oracle,
        detect_cycles=args.detect_cycles,
        strict_count=args.strict_count,
        source_label=label,
    )
    records = run_trials(config)
    text = emit_stats(records, args.format)
    if args.output is not None:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    if args.fail_on_cycle and any(r.negative_cycle_found for r in records):
        return 3
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    g, label = _resolve_graph(args)
    if g.n > ORACLE_CAP:
        raise DimacsFormatError(f"verify needs n <= {ORACLE_CAP}, graph has {g.n}")
    oracle = floyd_warshall(g)
    print(f"graph: n={g.n} m={g.m} ({label})")
    failures = 0
    cycle_found = False
    if oracle.has_reachable_negative_cycle:
        _, _, verdict = run_with_detection(g, args.seed, args.c)
        cycle_found = verdict.found
        ok = verdict.found
        print(f"oracle: negative cycle reachable from source")
        print(f"detector: {'ok' if ok else 'MISSED'} "
              f"(found={verdict.found}, iterations={verdict.iterations_used})")
        failures += 0 if ok else 1
    else:
        row = oracle.dist[g.source]
        runs = {
            "basic": run_basic(g)[0],
            "adaptive": run_adaptive(g)[0],
            "yen": run_yen(g, identity_ordering(g))[0],
            "randomized": run_randomized(g, args.seed)[0],
        }
        for name, state in runs.items():
            ok = _dist_matches_oracle(state.dist, row)
            print(f"{name}: {'ok' if ok else 'MISMATCH'}")
            failures += 0 if ok else 1
        _, _, verdict = run_with_detection(g, args.seed, args.c)
        ok = not verdict.found
        print(f"detector: {'ok' if ok else 'FALSE POSITIVE'}")
        failures += 0 if ok else 1
    if failures:
        return 1
    if cycle_found and args.fail_on_cycle:
        return 3
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="relaxbench",
        description="Instrumented Bellman-Ford variants with exact relaxation accounting.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("generate", help="write a generated instance as DIMACS .gr")
    _add_graph_source_args(p_gen)
    p_gen.add_argument("--output", type=Path, required=True)
    p_gen.set_defaults(func=_cmd_generate)

    p_run = sub.add_parser("run", help="run an engine over a seed batch")
    _add_graph_source_args(p_run)
    p_run.add_argument("--algorithm", choices=ALGORITHMS, required=True)
    p_run.add_argument("--ordering", choices=ORDERINGS, default="identity",
                       help="vertex ordering for --algorithm yen")
    seeds = p_run.add_mutually_exclusive_group()
    seeds.add_argument("--seed", type=int, default=0)
    seeds.add_argument("--seeds", type=str, help="half-open range A:B")
    p_run.add_argument("--c", type=float, default=2.0,
                       help="confidence exponent for detection thresholds")
    p_run.add_argument("--check-oracle", action="store_true")
    p_run.add_argument("--detect-cycles", action="store_true")
    p_run.add_argument("--strict-count", action="store_true",
                       help="basic engine: count skipped relaxations too")
    p_run.add_argument("--fail-on-cycle", action="store_true")
    p_run.add_argument("--format", choices=FORMATS, default="csv")
    p_run.add_argument("--output", type=Path)
    p_run.set_defaults(func=_cmd_run)

    p_ver = sub.add_parser("verify", help="check every engine against the exact oracle")
    _add_graph_source_args(p_ver)
    p_ver.add_argument("--seed", type=int, default=0)
    p_ver.add_argument("--c", type=float, default=2.0)
    p_ver.add_argument("--fail-on-cycle", action="store_true")
    p_ver.set_defaults(func=_cmd_verify)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DimacsFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OracleMismatchError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
