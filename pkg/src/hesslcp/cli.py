"""Command-line front end.

Subcommands: solve, classify, digraph, bench, gen.  Results go to stdout,
diagnostics to stderr.  Exit codes: 0 success, 2 unreadable or malformed
input, 3 structure or size not supported, 4 no solution exists (the matrix
was not a P-matrix), 5 malformed cycle sequence.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from statistics import mean

from .analysis import classify, is_nondegenerate, is_p_matrix, is_z_matrix
from .digraph import build_digraph, contains_cycle, find_cycle, find_sinks, to_dot
from .errors import (
    InstanceFormatError,
    InvalidArgumentError,
    MalformedCycleError,
    NoCandidatePassedError,
    NoOptimalBasisError,
    StructureError,
    TooLargeError,
)
from .exact import format_scalar
from .instance_io import dump_instance, load_cycle, load_instance
from .oracle import STRUCTURES, brute_force_solve, generate_instance
from .solver import solve

EXIT_FORMAT = 2
EXIT_UNSUPPORTED = 3
EXIT_NO_SOLUTION = 4
EXIT_BAD_CYCLE = 5


def fmt_basis(basis) -> str:
    return "{" + ",".join(str(i) for i in sorted(basis)) + "}"


def fmt_vector(v) -> str:
    return " ".join(format_scalar(x) for x in v)


def _json_entry(x):
    return int(x.numerator) if x.denominator == 1 else format_scalar(x)


def cmd_solve(args) -> int:
    instance = load_instance(args.instance)
    report = solve(instance, fallback_limit=args.fallback_limit)
    prefix = [sorted(b) for b in report.prefix_bases.as_list()]
    if args.json:
        doc = {
            "name": instance.name,
            "n": instance.n,
            "structure": report.structure,
            "basis": sorted(report.optimal_basis),
            "w": [_json_entry(x) for x in report.w],
            "z": [_json_entry(x) for x in report.z],
            "basis_tests": report.basis_test_count,
        }
        if args.report_prefix_bases:
            doc["prefix_bases"] = prefix
        print(json.dumps(doc, indent=2))
    else:
        if instance.name:
            print(f"name: {instance.name}")
        print(f"n: {instance.n}")
        print(f"structure: {report.structure}")
        print(f"basis: {fmt_basis(report.optimal_basis)}")
        print(f"w: {fmt_vector(report.w)}")
        print(f"z: {fmt_vector(report.z)}")
        print(f"basis tests: {report.basis_test_count}")
        if args.report_prefix_bases:
            for k, b in enumerate(prefix, start=1):
                print(f"prefix[{k}]: {fmt_basis(b)}")
    return 0


def cmd_classify(args) -> int:
    instance = load_instance(args.instance)
    profile = classify(instance.matrix)
    print(f"n: {profile.n}")
    print(f"left half-bandwidth: {profile.left_half_bandwidth}")
    print(f"right half-bandwidth: {profile.right_half_bandwidth}")
    print(f"bandwidth: {profile.bandwidth}")
    print(f"tridiagonal: {str(profile.is_tridiagonal).lower()}")
    print(f"lower hessenberg: {str(profile.is_lower_hessenberg).lower()}")
    print(f"upper hessenberg: {str(profile.is_upper_hessenberg).lower()}")
    print(f"z-matrix: {str(is_z_matrix(instance.matrix)).lower()}")
    if args.check_p:
        print(f"p-matrix: {str(is_p_matrix(instance.matrix)).lower()}")
    if args.check_nondegenerate:
        print(f"nondegenerate: {str(is_nondegenerate(instance)).lower()}")
    return 0


def cmd_digraph(args) -> int:
    instance = load_instance(args.instance)
    g = build_digraph(instance, mode=args.mode)
    print(f"n: {g.n}")
    print(f"mode: {g.mode}")
    print(f"vertices: {g.vertex_count}")
    print(f"arcs: {g.arc_count}")
    sinks = find_sinks(g)
    print(f"sinks: {' '.join(fmt_basis(b) for b in sinks)}")
    if args.dot_out:
        try:
            with open(args.dot_out, "w") as fh:
                fh.write(to_dot(g))
        except OSError as exc:
            raise InstanceFormatError(f"cannot write {args.dot_out}: {exc}") from None
        print(f"dot written: {args.dot_out}", file=sys.stderr)
    if args.find_cycle:
        cycle = find_cycle(g)
        if cycle is None:
            print("acyclic")
        else:
            print("cycle: " + " -> ".join(fmt_basis(b) for b in cycle))
    if args.check_cycle:
        cycle = load_cycle(args.check_cycle)
        present = contains_cycle(g, cycle)
        print(f"cycle present: {str(present).lower()}")
    return 0


def _parse_range(text: str):
    lo, sep, hi = text.partition("..")
    if not sep:
        lo = hi = text
    try:
        return range(int(lo), int(hi) + 1)
    except ValueError:
        raise InvalidArgumentError(f"bad n-range {text!r}, expected like 2..8") from None


def cmd_bench(args) -> int:
    rows = []
    for n in _parse_range(args.n_range):
        if n < 1:
            raise InvalidArgumentError(f"n must be at least 1, got {n}")
        counts = []
        errors = 0
        agree = checked = 0
        t0 = time.perf_counter()
        for i in range(args.instances_per_n):
            try:
                inst = generate_instance(n, args.structure, seed=args.seed + i)
                report = solve(inst)
            except Exception as exc:
                errors += 1
                print(f"n={n} instance {i}: {exc}", file=sys.stderr)
                continue
            counts.append(report.basis_test_count)
            if n <= args.oracle_max:
                checked += 1
                oracle = brute_force_solve(inst)
                if oracle.lex_optimal_basis == report.optimal_basis:
                    agree += 1
        wall = time.perf_counter() - t0
        rows.append(
            {
                "n": n,
                "structure": args.structure,
                "instances": args.instances_per_n,
                "errors": errors,
                "max_tests": max(counts) if counts else "",
                "mean_tests": round(mean(counts), 2) if counts else "",
                "budget": n * (n + 1) // 2,
                "oracle_checked": checked,
                "agreement": f"{agree}/{checked}" if checked else "",
                "wall_seconds": round(wall, 3),
            }
        )

    fields = ["n", "structure", "instances", "errors", "max_tests", "mean_tests",
              "budget", "oracle_checked", "agreement", "wall_seconds"]
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            writer = csv.DictWriter(fh, fieldnames=fields)
            writer.writeheader()
            writer.writerows(rows)
        print(f"csv written: {args.csv}", file=sys.stderr)
    else:
        print("\t".join(fields))
        for row in rows:
            print("\t".join(str(row[f]) for f in fields))
    return 0


def cmd_gen(args) -> int:
    instance = generate_instance(args.n, args.structure, seed=args.seed,
                                 family=args.family)
    try:
        dump_instance(instance, args.out)
    except OSError as exc:
        raise InstanceFormatError(f"cannot write {args.out}: {exc}") from None
    print(f"instance written: {args.out}", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hesslcp",
        description="Exact solver for linear complementarity problems with "
                    "tridiagonal or Hessenberg P-matrices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve an instance file")
    p.add_argument("instance", help="path to a JSON instance file")
    p.add_argument("--json", action="store_true", help="emit JSON instead of text")
    p.add_argument("--report-prefix-bases", action="store_true",
                   help="include the per-stage bases of the staged solve")
    p.add_argument("--fallback-limit", type=int, default=None, metavar="N",
                   help="enumeration ceiling for non-Hessenberg matrices")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("classify", help="report band structure and matrix classes")
    p.add_argument("instance")
    p.add_argument("--check-p", action="store_true",
                   help="run the exhaustive P-matrix check (exponential)")
    p.add_argument("--check-nondegenerate", action="store_true",
                   help="run the exhaustive nondegeneracy check (exponential)")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("digraph", help="build the orientation digraph")
    p.add_argument("instance")
    p.add_argument("--mode", choices=["lex", "plain"], default="lex")
    p.add_argument("--dot-out", metavar="FILE", help="write DOT to FILE")
    p.add_argument("--find-cycle", action="store_true",
                   help="search for a directed cycle")
    p.add_argument("--check-cycle", metavar="FILE",
                   help="verify a vertex sequence from a JSON cycle file")
    p.set_defaults(func=cmd_digraph)

    p = sub.add_parser("bench", help="benchmark the staged solver on generated instances")
    p.add_argument("--n-range", default="1..8", metavar="A..B")
    p.add_argument("--structure", choices=list(STRUCTURES), default="tridiagonal")
    p.add_argument("--instances-per-n", type=int, default=10, metavar="K")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--oracle-max", type=int, default=8, metavar="N",
                   help="cross-check against enumeration for n up to N")
    p.add_argument("--csv", metavar="FILE", help="write rows as CSV to FILE")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("gen", help="generate a random P-matrix instance file")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--structure", choices=list(STRUCTURES), default="tridiagonal")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--family", choices=["auto", "dominant", "random"], default="auto")
    p.add_argument("--out", required=True, metavar="FILE")
    p.set_defaults(func=cmd_gen)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InstanceFormatError, InvalidArgumentError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FORMAT
    except (TooLargeError, StructureError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except (NoOptimalBasisError, NoCandidatePassedError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO_SOLUTION
    except MalformedCycleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_CYCLE


if __name__ == "__main__":
    sys.exit(main())
