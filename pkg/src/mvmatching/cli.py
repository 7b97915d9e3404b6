"""Command-line front end: solve, verify, gen, oracle-check, bench.

Exit codes: 0 success, 1 semantic failure (invalid or non-maximum
matching, structural-theorem violation), 2 usage or input error.
"""

from __future__ import annotations

import argparse
import math
import random
import statistics
import sys
import time
from typing import Optional, TextIO

from . import oracle
from .graph import (
    Graph,
    GraphFormatError,
    MatchingState,
    generate_random_graph,
    parse_dimacs,
    parse_matching,
    serialize_dimacs,
    serialize_matching,
    validate_matching,
)
from .phase import run_phase
from .solver import maximum_matching

TRACE_HEADER = "mvtrace 1"


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write_out(cfg: argparse.Namespace, text: str) -> None:
    if getattr(cfg, "out", None):
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _trace_fn(cfg: argparse.Namespace, sink: TextIO):
    if not cfg.trace:
        return None
    sink.write(TRACE_HEADER + "\n")

    def emit(line: str) -> None:
        sink.write(line + "\n")

    return emit


def cmd_solve(cfg: argparse.Namespace) -> int:
    try:
        g = parse_dimacs(_read_text(cfg.input))
    except (OSError, GraphFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    trace = _trace_fn(cfg, sys.stderr)
    matching, phases = maximum_matching(g, trace=trace)
    text = serialize_matching(matching)
    _write_out(cfg, text)
    if cfg.out:
        print(f"size {matching.size()}")
    print(f"phases {phases}", file=sys.stderr)
    return 0


def cmd_verify(cfg: argparse.Namespace) -> int:
    try:
        g = parse_dimacs(_read_text(cfg.input))
        m = parse_matching(_read_text(cfg.matching), g.n)
    except (OSError, GraphFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    violations = validate_matching(g, m)
    if violations:
        for v in violations:
            print(f"invalid: {v}")
        return 1
    result = run_phase(g, m)
    if result.paths:
        witness = "-".join(str(v + 1) for v in result.paths[0].vertices)
        print(f"not maximum: augmenting path {witness}")
        return 1
    print(f"valid maximum matching of size {m.size()}")
    return 0


def cmd_gen(cfg: argparse.Namespace) -> int:
    try:
        g = generate_random_graph(cfg.n, cfg.m, cfg.seed)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(f"c seed {cfg.seed}", file=sys.stderr)
    _write_out(cfg, serialize_dimacs(g))
    return 0


def _greedy_matching(g: Graph, seed: int) -> MatchingState:
    rng = random.Random(seed)
    order = list(range(g.m))
    rng.shuffle(order)
    m = MatchingState(g.n)
    for eid in order:
        u, v = g.edges[eid]
        if not m.is_matched(u) and not m.is_matched(v) and rng.random() < 0.75:
            m.partner[u] = v
            m.partner[v] = u
    return m


def cmd_oracle_check(cfg: argparse.Namespace) -> int:
    try:
        g = parse_dimacs(_read_text(cfg.input))
    except (OSError, GraphFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    guard = not cfg.guard_override
    if guard and g.n > oracle.LEVEL_GUARD_N:
        print(
            f"error: n = {g.n} exceeds oracle guard {oracle.LEVEL_GUARD_N} "
            "(use --guard-override at your own risk)",
            file=sys.stderr,
        )
        return 2
    failures = 0
    matchings = [MatchingState(g.n)] + [_greedy_matching(g, cfg.seed + k) for k in range(3)]
    for idx, m in enumerate(matchings):
        profile = oracle.compute_profile(g, m, deep=True, guard=guard)
        violations = oracle.check_structural_theorems(g, m, profile, guard=guard)
        for v in violations:
            print(f"matching {idx}: {v}")
            failures += 1
        result = run_phase(g, m)
        even = list(result.state.evenlevel)
        odd = list(result.state.oddlevel)
        if cfg.fault_inject and g.n:
            even[0] += 2  # negative-control corruption
        for v in range(g.n):
            if profile.tenacity[v] >= profile.l_m:
                continue
            if even[v] != profile.evenlevel[v] or odd[v] != profile.oddlevel[v]:
                print(
                    f"matching {idx}: engine levels for {v} "
                    f"({even[v]}, {odd[v]}) != oracle "
                    f"({profile.evenlevel[v]}, {profile.oddlevel[v]})"
                )
                failures += 1
        engine_lm = result.l_m
        if engine_lm != profile.l_m:
            print(f"matching {idx}: engine l_m {engine_lm} != oracle {profile.l_m}")
            failures += 1
    if failures:
        print(f"{failures} disagreement(s)")
        return 1
    print(f"ok: {len(matchings)} matchings checked")
    return 0


def cmd_bench(cfg: argparse.Namespace) -> int:
    print("n m phases seconds")
    for rep in range(cfg.repeats):
        g = generate_random_graph(cfg.n, cfg.m, cfg.seed + rep)
        start = time.perf_counter()
        matching, phases = maximum_matching(g)
        elapsed = time.perf_counter() - start
        bound = math.ceil(2 * math.sqrt(g.n)) + 2
        print(f"{g.n} {g.m} {phases} {elapsed:.3f}")
        if phases > bound:
            print(f"error: phases {phases} exceed bound {bound}", file=sys.stderr)
            return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mvmatch",
        description="Maximum-cardinality matching in general graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="compute a maximum matching for a DIMACS graph")
    solve.add_argument("input", help="DIMACS edge-format file, or - for stdin")
    solve.add_argument("--trace", action="store_true", help="emit phase traces to stderr")
    solve.add_argument("--out", help="write the matching to a file")
    solve.add_argument("--seed", type=int, default=0)
    solve.set_defaults(func=cmd_solve)

    verify = sub.add_parser("verify", help="check a matching file for validity and maximality")
    verify.add_argument("input", help="DIMACS edge-format file, or - for stdin")
    verify.add_argument("matching", help="matching file (size/matched lines)")
    verify.set_defaults(func=cmd_verify)

    gen = sub.add_parser("gen", help="generate a seeded random graph")
    gen.add_argument("n", type=int)
    gen.add_argument("m", type=int)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--out", help="write the graph to a file")
    gen.set_defaults(func=cmd_gen)

    ocheck = sub.add_parser(
        "oracle-check",
        help="compare the engine against the brute-force oracle on a small graph",
    )
    ocheck.add_argument("input", help="DIMACS edge-format file, or - for stdin")
    ocheck.add_argument("--seed", type=int, default=0)
    ocheck.add_argument("--guard-override", action="store_true")
    ocheck.add_argument("--fault-inject", action="store_true", help=argparse.SUPPRESS)
    ocheck.set_defaults(func=cmd_oracle_check)

    bench = sub.add_parser("bench", help="time the solver on seeded random graphs")
    bench.add_argument("--n", type=int, default=1000)
    bench.add_argument("--m", type=int, default=5000)
    bench.add_argument("--seed", type=int, default=0)
    bench.add_argument("--repeats", type=int, default=1)
    bench.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
