"""Command-line interface.

All results go to standard output as JSON (or DOT for ``hasse``);
diagnostics go to standard error. Exit status: 0 on success or when the
queried relation holds, 1 when it does not (or a suite failed), 2 on errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .errors import ParseError, PreconditionViolated, RickartError
from .harness import SUITE_NAMES, PosetTable, RingUniverse, brute_force_poset_ops, ring_poset, run_suites
from .matrix import Matrix
from .orders import OrderFormulation, equivalence_report, star_le
from .projections import proj_le
from .star_ring import RingDescriptor, pinv, primes
from .structure import initial_segment, ring_projections, segment_join, segment_meet

__all__ = ["main", "emit_hasse_dot"]

ADMITTED = "Qi:n=<n> (any n), M1(F<p>) (any prime p), M2(F<p>) (p ≡ 3 mod 4)"

RELATIONS = ("right-cstar", "left-cstar", "projection")


class CliError(Exception):
    pass


def _load(path: str) -> Matrix:
    try:
        with open(path) as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise CliError(f"{path}: invalid JSON: {exc}") from exc
    try:
        return Matrix.from_json(obj)
    except ParseError as exc:
        raise CliError(f"{path}: {exc}") from exc


def _ring(text: str) -> RingDescriptor:
    try:
        d = RingDescriptor.parse(text)
    except ParseError as exc:
        raise CliError(f"{exc}; admitted rings: {ADMITTED}") from exc
    if not d.proper:
        raise CliError(f"{d} does not carry a proper involution; admitted rings: {ADMITTED}")
    return d


def _emit(obj) -> None:
    json.dump(obj, sys.stdout, ensure_ascii=False)
    sys.stdout.write("\n")


def emit_hasse_dot(table: PosetTable, name: str = "hasse") -> str:
    """DOT text for the covering relation of a finite poset.

    Nodes are numbered in lexicographic entry order and labelled with the
    canonical entry string; each covering pair gives one edge lower -> upper.
    """
    order = sorted(range(len(table.elements)), key=lambda i: table.elements[i].sort_key())
    node = {i: k for k, i in enumerate(order)}
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for k, i in enumerate(order):
        label = str(table.elements[i]).replace('"', '\\"')
        lines.append(f'  n{k} [label="{label}"];')
    for lo, hi in sorted((node[i], node[j]) for i, j in table.covers):
        lines.append(f"  n{lo} -> n{hi};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- commands ----------------------------------------------------------------


def _cmd_pinv(args) -> int:
    _emit(pinv(_load(args.matrix)).to_json())
    return 0


def _cmd_primes(args) -> int:
    _emit(primes(_load(args.matrix)).to_json())
    return 0


def _cmd_order(args) -> int:
    a, b = _load(args.a), _load(args.b)
    if args.formulation == "all":
        report = equivalence_report(a, b, args.side)
        _emit({**report.to_json(), "holds": report.holds})
        return 0 if report.holds else 1
    holds = star_le(a, b, args.side, OrderFormulation(args.formulation))
    _emit({"side": args.side, "formulation": args.formulation, "holds": holds})
    return 0 if holds else 1


def _cmd_meet(args) -> int:
    x, a, b = _load(args.bound), _load(args.a), _load(args.b)
    op = segment_meet if args.command == "meet" else segment_join
    _emit(op(x, a, b).to_json())
    return 0


def _cmd_segment(args) -> int:
    d = _ring(args.ring)
    x = _load(args.top)
    if RingDescriptor.of(x) != d:
        raise CliError(f"--top lives in {RingDescriptor.of(x)}, not {d}")
    _emit([m.to_json() for m in initial_segment(x)])
    return 0


def _cmd_hasse(args) -> int:
    d = _ring(args.ring)
    if not d.enumerable:
        raise CliError(f"hasse needs a finite ring, got {d}")
    if args.relation == "projection":
        table = brute_force_poset_ops(ring_projections(d), proj_le)
    else:
        table = ring_poset(d, args.relation.split("-")[0])
    text = emit_hasse_dot(table)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_verify(args) -> int:
    d = _ring(args.ring)
    if d.enumerable and not args.sample:
        universe = RingUniverse.exhaustive(d)
    else:
        universe = RingUniverse.sampled(d, args.samples, args.seed, args.entry_bound)
    reports = run_suites(args.suite, universe, workers=args.workers)
    for r in reports:
        status = "ok" if r.ok else f"{len(r.failures)} FAILURES"
        print(f"{r.suite} [{universe}]: {r.cases} cases, {status}, {r.seconds:.2f}s", file=sys.stderr)
    _emit([r.to_json() for r in reports])
    return 0 if all(r.ok for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rickart", description="Exact star orders, pseudoinverses and projection lattices of matrix *-rings."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pinv", help="Moore-Penrose inverse of a matrix")
    p.add_argument("matrix")
    p.set_defaults(func=_cmd_pinv)

    p = sub.add_parser("primes", help="left/right primes and double primes")
    p.add_argument("matrix")
    p.set_defaults(func=_cmd_primes)

    p = sub.add_parser("order", help="decide a one-sided star order between two matrices")
    p.add_argument("--side", choices=("left", "right"), required=True)
    p.add_argument(
        "--formulation", choices=[f.value for f in OrderFormulation] + ["all"], default="prime"
    )
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=_cmd_order)

    for name, what in (("meet", "meet x(a″ ∧ b″)"), ("join", "join x(a″ ∨ b″)")):
        p = sub.add_parser(name, help=f"bounded {what} of a, b below x")
        p.add_argument("--bound", required=True)
        p.add_argument("a")
        p.add_argument("b")
        p.set_defaults(func=_cmd_meet)

    p = sub.add_parser("segment", help="enumerate the initial segment [0, x]")
    p.add_argument("--top", required=True)
    p.add_argument("--ring", required=True)
    p.set_defaults(func=_cmd_segment)

    p = sub.add_parser("hasse", help="Hasse diagram (DOT) of a finite poset")
    p.add_argument("--relation", choices=RELATIONS, default="right-cstar")
    p.add_argument("--ring", required=True)
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_hasse)

    p = sub.add_parser("verify", help="run property suites")
    p.add_argument("--suite", default="all", choices=list(SUITE_NAMES) + ["all"])
    p.add_argument("--ring", required=True)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--entry-bound", type=int, default=3)
    p.add_argument("--sample", action="store_true", help="sample a finite ring instead of enumerating it")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=_cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (CliError, RickartError, ValueError) as exc:
        print(f"rickart {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
