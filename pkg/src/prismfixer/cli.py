"""Command line frontend with deterministic, scriptable output.

Commands
    gamma      exact domination number of one graph
    adversary  adversary certificate for one graph
    fixer      exhaustive universal-fixer decision for one graph
    sweep      fixer + adversary verification over a graph6 corpus file

JSON output is one record per line:

    {"kind": <gamma|analyze|adversary|fixer|sweep-summary>,
     "schema_version": 1,
     "payload": {...}}

Payload fields by kind (vertex sets are sorted integer lists; copy
vertices of a prism are plain integers v + n; permutations are image
lists):

    gamma          graph6?, n, gamma, witness, gamma_sets?
    adversary      graph6, x, pi, gamma, prism_gamma, records[], flags{},
                   anomalies[], passed
    fixer          graph6, gamma, is_universal_fixer, witness_pi,
                   witness_prism_gamma, permutations_tested
    analyze        input, graph6, n, edges, gamma, fixer{}, adversary{}
                   (or input, error)
    sweep-summary  graphs, parse_failures, fixers[], fixer_count,
                   edgeless_count, fixers_equal_edgeless,
                   adversary_applicable, adversary_all_passed

Exit codes: 0 success, 1 parse or usage error, 2 graph not applicable,
3 bad --vertex, 4 size guard exceeded.

PRISM_FIXER_GUARD overrides the default size guards of fixer, sweep and
adversary; an explicit --guard flag wins over the environment.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Sequence

from .domination import domination_number, enumerate_gamma_sets
from .graphs import (
    Graph,
    GraphParseError,
    is_triangle_free_vertex,
    mask_to_list,
    parse_edge_list,
    parse_graph6,
    to_graph6,
)
from .prism import format_permutation, random_adversary_permutation
from .verify import (
    DEFAULT_FIXER_GUARD,
    GuardExceededError,
    analyze_graph6_line,
    certificate_payload,
    check_graph,
    fixer_verdict_payload,
    is_universal_fixer,
)

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NOT_APPLICABLE = 2
EXIT_BAD_VERTEX = 3
EXIT_GUARD = 4

GUARD_ENV_VAR = "PRISM_FIXER_GUARD"


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; the CLI contract reserves 2 for
    # "not applicable", so remap usage problems to 1
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _record(kind: str, payload: dict) -> str:
    body = {"kind": kind, "schema_version": SCHEMA_VERSION, "payload": payload}
    return json.dumps(body, sort_keys=True, separators=(",", ":"))


def _default_guard() -> int:
    raw = os.environ.get(GUARD_ENV_VAR)
    if raw is None:
        return DEFAULT_FIXER_GUARD
    try:
        return int(raw)
    except ValueError:
        print(f"{GUARD_ENV_VAR} must be an integer, got {raw!r}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE) from None


def _add_input_args(sub: argparse.ArgumentParser) -> None:
    group = sub.add_mutually_exclusive_group(required=True)
    group.add_argument("--g6", metavar="TEXT", help="graph6 string")
    group.add_argument(
        "--g6-file", metavar="PATH", help="file holding one graph6 line"
    )
    group.add_argument(
        "--edges",
        metavar="PATH",
        help="edge-list file ('-' for stdin): vertex count, then 'u v' pairs",
    )


def _load_graph(args) -> Graph:
    if args.g6 is not None:
        return parse_graph6(args.g6)
    if args.g6_file is not None:
        with open(args.g6_file, encoding="ascii") as handle:
            lines = [ln.strip() for ln in handle if ln.strip()]
        if len(lines) != 1:
            raise GraphParseError(
                f"expected exactly one graph6 line in {args.g6_file}, got {len(lines)}"
            )
        return parse_graph6(lines[0])
    if args.edges == "-":
        return parse_edge_list(sys.stdin.read())
    with open(args.edges, encoding="ascii") as handle:
        return parse_edge_list(handle.read())


def _print_timing(args, started: float) -> None:
    if getattr(args, "timing", False):
        print(f"elapsed: {time.perf_counter() - started:.3f}s", file=sys.stderr)


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def cmd_gamma(args) -> int:
    g = _load_graph(args)
    result = domination_number(g)
    payload = {
        "n": g.n,
        "gamma": result.gamma,
        "witness": mask_to_list(result.witness),
    }
    if g.n <= 62:
        payload["graph6"] = to_graph6(g)
    if args.all:
        payload["gamma_sets"] = [mask_to_list(m) for m in enumerate_gamma_sets(g)]
    if args.json:
        print(_record("gamma", payload))
    else:
        print(f"gamma = {result.gamma}")
        print(f"witness = {payload['witness']}")
        if args.all:
            for s in payload["gamma_sets"]:
                print(f"gamma-set: {s}")
    return EXIT_OK


def cmd_adversary(args) -> int:
    g = _load_graph(args)
    if args.random_derangement:
        if args.seed is None:
            print("--random-derangement requires an explicit --seed", file=sys.stderr)
            return EXIT_USAGE
        x = args.vertex
        if x is None:
            eligible = [v for v in range(g.n) if is_triangle_free_vertex(g, v)]
            if not eligible:
                print("not applicable: no vertex lies outside every triangle",
                      file=sys.stderr)
                return EXIT_NOT_APPLICABLE
            x = eligible[0]
        try:
            pi = random_adversary_permutation(g, x, random.Random(args.seed))
        except ValueError:
            print(f"vertex {x} is isolated or lies on a triangle", file=sys.stderr)
            return EXIT_BAD_VERTEX
        print(format_permutation(pi))
        return EXIT_OK
    try:
        cert = check_graph(g, x=args.vertex)
    except GuardExceededError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_GUARD
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_BAD_VERTEX
    if cert is None:
        print("not applicable: no vertex lies outside every triangle", file=sys.stderr)
        return EXIT_NOT_APPLICABLE
    if args.json:
        print(_record("adversary", certificate_payload(cert)))
        return EXIT_OK
    print(f"graph: {cert.graph6}  (n = {g.n}, gamma = {cert.gamma})")
    print(f"chosen vertex: {cert.x}")
    moved = _moved_cycle(cert.pi, cert.x)
    matches = ", ".join(f"{v} -> {cert.pi[v]}'" for v in moved)
    print(f"permutation: {format_permutation(cert.pi)}  (moved: {matches})")
    print(f"prism gamma: {cert.prism_gamma}  (strict increase: "
          f"{'yes' if cert.gamma_strict_increase_ok else 'NO'})")
    print(f"separable records: {len(cert.records)}")
    for sep, case in cert.records:
        tag = case.tag if case else "UNCLASSIFIED"
        detail = (
            ", ".join(f"{k}={v}" for k, v in sorted(case.detail.items()))
            if case
            else ""
        )
        print(
            f"  set={mask_to_list(sep.dom_set)} part1={mask_to_list(sep.part1)} "
            f"part2={mask_to_list(sep.part2)} -> {tag} ({detail})"
        )
    for note in cert.anomalies:
        print(f"  ANOMALY: {note}")
    print(f"verdict: {'PASS' if cert.passed else 'FAIL'}")
    return EXIT_OK


def _moved_cycle(pi: Sequence[int], x: int) -> list[int]:
    # walk the cycle of pi through x (covers the whole moved block)
    cycle = [x]
    v = pi[x]
    while v != x:
        cycle.append(v)
        v = pi[v]
    return cycle


def cmd_fixer(args) -> int:
    g = _load_graph(args)
    try:
        verdict = is_universal_fixer(g, args.guard)
    except GuardExceededError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_GUARD
    if args.json:
        print(_record("fixer", fixer_verdict_payload(verdict)))
        return EXIT_OK
    if verdict.is_universal_fixer:
        print(f"universal fixer: yes  ({verdict.permutations_tested} permutations, "
              f"gamma stays {verdict.gamma})")
    else:
        print("universal fixer: no")
        print(f"witness: {format_permutation(verdict.witness_pi)}")
        print(f"prism gamma {verdict.witness_prism_gamma} > gamma {verdict.gamma} "
              f"(found after {verdict.permutations_tested} permutations)")
    return EXIT_OK


def _sweep_worker(payload: tuple[str, int]) -> dict:
    line, guard = payload
    return analyze_graph6_line(line, guard)


def cmd_sweep(args) -> int:
    try:
        with open(args.corpus, encoding="ascii") as handle:
            lines = [ln.strip() for ln in handle if ln.strip()]
    except OSError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    if args.jobs < 1:
        print("--jobs must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    if args.jobs > 1 and len(lines) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            records = list(pool.map(_sweep_worker, ((ln, args.guard) for ln in lines),
                                    chunksize=16))
    else:
        records = [analyze_graph6_line(ln, args.guard) for ln in lines]
    records.sort(key=lambda r: r["input"])
    fixers = sorted(
        r["graph6"] for r in records if "fixer" in r and r["fixer"]["is_universal_fixer"]
    )
    edgeless = sorted(r["graph6"] for r in records if r.get("edges") == 0)
    applicable = [r for r in records if r.get("adversary")]
    summary = {
        "graphs": sum(1 for r in records if "error" not in r),
        "parse_failures": sum(1 for r in records if "error" in r),
        "fixers": fixers,
        "fixer_count": len(fixers),
        "edgeless_count": len(edgeless),
        "fixers_equal_edgeless": fixers == edgeless,
        "adversary_applicable": len(applicable),
        "adversary_all_passed": all(r["adversary"]["passed"] for r in applicable),
    }
    out_lines = [_record("analyze", r) for r in records]
    out_lines.append(_record("sweep-summary", summary))
    text = "\n".join(out_lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="ascii") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


# ---------------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="prismfixer", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_gamma = sub.add_parser("gamma", help="exact domination number")
    _add_input_args(p_gamma)
    p_gamma.add_argument("--all", action="store_true", help="list every gamma-set")
    p_gamma.add_argument("--json", action="store_true", help="JSON record output")
    p_gamma.add_argument("--timing", action="store_true", help="elapsed time to stderr")
    p_gamma.set_defaults(func=cmd_gamma)

    p_adv = sub.add_parser("adversary", help="adversary certificate")
    _add_input_args(p_adv)
    p_adv.add_argument("--vertex", type=int, default=None,
                       help="use this triangle-free vertex (default: smallest)")
    p_adv.add_argument("--json", action="store_true", help="JSON record output")
    p_adv.add_argument("--random-derangement", action="store_true",
                       help="print a random conforming permutation instead")
    p_adv.add_argument("--seed", type=int, default=None,
                       help="seed for --random-derangement (required with it)")
    p_adv.add_argument("--timing", action="store_true", help="elapsed time to stderr")
    p_adv.set_defaults(func=cmd_adversary)

    p_fix = sub.add_parser("fixer", help="exhaustive universal-fixer decision")
    _add_input_args(p_fix)
    p_fix.add_argument("--guard", type=int, default=None,
                       help=f"max n (default {DEFAULT_FIXER_GUARD}, env {GUARD_ENV_VAR})")
    p_fix.add_argument("--json", action="store_true", help="JSON record output")
    p_fix.add_argument("--timing", action="store_true", help="elapsed time to stderr")
    p_fix.set_defaults(func=cmd_fixer)

    p_sweep = sub.add_parser("sweep", help="verify a graph6 corpus file")
    p_sweep.add_argument("corpus", help="path to a graph6 file, one graph per line")
    p_sweep.add_argument("--jobs", type=int, default=1, help="parallel workers")
    p_sweep.add_argument("--out", default=None, help="write JSON lines here")
    p_sweep.add_argument("--guard", type=int, default=None,
                         help=f"max n (default {DEFAULT_FIXER_GUARD}, env {GUARD_ENV_VAR})")
    p_sweep.add_argument("--timing", action="store_true", help="elapsed time to stderr")
    p_sweep.set_defaults(func=cmd_sweep)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if hasattr(args, "guard") and args.guard is None:
        args.guard = _default_guard()
    started = time.perf_counter()
    try:
        code = args.func(args)
    except GraphParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:
        return int(exc.code or 0)
    _print_timing(args, started)
    return code


if __name__ == "__main__":
    sys.exit(main())
