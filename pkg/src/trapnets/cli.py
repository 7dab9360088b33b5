"""Command-line front end.

Exit codes: 0 for success (or an equivalent/no-violation verdict), 1 for a
negative verdict (not equivalent, violations found), 2 for usage or parse
errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .classes import NetworkProfile, classify_network
from .dynamics import GRAPH_PROPERTIES, graph_property, transient_and_period
from .generators import (
    long_transient_trapping,
    random_commutative,
    random_constant_on_arrangements,
    random_negation_on_subcubes,
    random_network,
)
from .netio import NetParseError, export_dot, network_to_text, parse_truth_table
from .trapspaces import ENUMERATION_MAX_N
from .verify import exhaustive_networks, run_verification, sample_population

ANALYZE_MAX_N = ENUMERATION_MAX_N
MINIMAL_ONLY_MAX_N = 16


def _positive_int(value: str) -> int:
    try:
        n = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{value!r} is not an integer")
    if n < 1:
        raise argparse.ArgumentTypeError("value must be at least 1")
    return n


def _load_network(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        raise SystemExit(2) from None
    try:
        return parse_truth_table(text, name=path)
    except NetParseError as exc:
        print(f"error: {path}: {exc}", file=sys.stderr)
        raise SystemExit(2) from None


def _analysis_report(doc, minimal_only: bool) -> dict:
    f = doc.network
    profile = NetworkProfile(f)
    minimal, min_configs = profile.minimal
    transient, period = transient_and_period(f)
    report: dict = {
        "name": doc.name,
        "n": f.n,
        "transient": transient,
        "period": period,
        "trapspaces": {
            "principal_distinct": len(profile.pt_collection),
            "minimal": len(minimal),
            "min_configs": len(min_configs),
            "minimal_cubes": [str(c) for c in minimal.sorted_members()],
        },
    }
    if minimal_only:
        return report
    report["trapspaces"]["all"] = len(profile.trapspace_collection)
    report["classes"] = classify_network(f, profile).as_dict()
    graphs = {}
    for key, g in (
        ("asynchronous", profile.graph_a),
        ("general", profile.graph_ga),
        ("trapping", profile.graph_tg),
    ):
        graphs[key] = {p: graph_property(g, p) for p in GRAPH_PROPERTIES}
    report["graphs"] = graphs
    return report


def _print_text_report(report: dict) -> None:
    print(f"name: {report['name']}")
    print(f"n: {report['n']}")
    ts = report["trapspaces"]
    print(f"trapspaces: principal distinct: {ts['principal_distinct']}", end="")
    if "all" in ts:
        print(f", all: {ts['all']}", end="")
    print(f", minimal: {ts['minimal']} (covering {ts['min_configs']} configurations)")
    for cube in ts["minimal_cubes"]:
        print(f"  minimal: {cube}")
    print(f"dynamics: transient {report['transient']}, period {report['period']}")
    if "classes" in report:
        flags = report["classes"]
        on = [k for k, v in flags.items() if v]
        off = [k for k, v in flags.items() if not v]
        print(f"classes (true): {', '.join(on) if on else '(none)'}")
        print(f"classes (false): {', '.join(off) if off else '(none)'}")
    if "graphs" in report:
        for key, props in report["graphs"].items():
            line = ", ".join(f"{p}={'yes' if v else 'no'}" for p, v in props.items())
            print(f"graph {key}: {line}")


def cmd_analyze(args) -> int:
    doc = _load_network(args.file)
    cap = MINIMAL_ONLY_MAX_N if args.minimal_only else ANALYZE_MAX_N
    if doc.n > cap:
        mode = "minimal-only" if args.minimal_only else "full"
        print(f"error: {mode} analysis is capped at n={cap}", file=sys.stderr)
        return 2
    report = _analysis_report(doc, args.minimal_only)
    if args.format == "json":
        print(json.dumps(report, indent=2))
    else:
        _print_text_report(report)
    return 0


def cmd_graph(args) -> int:
    doc = _load_network(args.file)
    profile = NetworkProfile(doc.network)
    chain = [
        ("asynchronous", profile.graph_a),
        ("general asynchronous", profile.graph_ga),
        ("trapping", profile.graph_tg),
    ]
    depth = {"async": 1, "ga": 2, "tg": 3}[args.kind]
    if args.layered:
        depth = 3
    layers = [g for _, g in chain[:depth]]
    labels = [name for name, _ in chain[:depth]]
    sys.stdout.write(export_dot(layers, labels))
    return 0


TRAPSPACE_CONDITIONS = (
    "same principal trapspace collection",
    "same trapspace collection",
    "same principal trapspaces pointwise",
    "same trapping graph",
    "same trapping closure",
)
MIN_CONDITIONS = (
    "same minimal trapspace collection",
    "same min configurations with equal principal trapspaces there",
    "equal principal trapspaces on either side's min configurations",
    "same min-trapping extension",
)


def cmd_equiv(args) -> int:
    doc_a = _load_network(args.file_a)
    doc_b = _load_network(args.file_b)
    if doc_a.n != doc_b.n:
        print(
            f"error: dimension mismatch: {doc_a.n} != {doc_b.n}",
            file=sys.stderr,
        )
        return 2
    from .classes import min_trapspace_equivalent, trapspace_equivalent

    if args.mode == "trapspace":
        vector = trapspace_equivalent(doc_a.network, doc_b.network)
        names = TRAPSPACE_CONDITIONS
    else:
        vector = min_trapspace_equivalent(doc_a.network, doc_b.network)
        names = MIN_CONDITIONS
    for name, value in zip(names, vector):
        print(f"{name}: {'yes' if value else 'no'}")
    equivalent = all(vector)
    print(f"verdict: {'equivalent' if equivalent else 'not equivalent'}")
    return 0 if equivalent else 1


def cmd_verify(args) -> int:
    if args.exhaustive and args.samples is not None:
        print("error: choose either --exhaustive or --samples", file=sys.stderr)
        return 2
    if args.n <= 2:
        if not args.exhaustive:
            print("error: n <= 2 requires --exhaustive", file=sys.stderr)
            return 2
        networks = exhaustive_networks(args.n)
        pairs = [(f, g) for f in networks for g in networks]
    else:
        if args.exhaustive:
            print("error: --exhaustive is only available for n <= 2", file=sys.stderr)
            return 2
        if args.samples is None:
            print("error: n >= 3 requires --samples", file=sys.stderr)
            return 2
        if args.n > 6:
            print("error: sampled verification is capped at n=6", file=sys.stderr)
            return 2
        networks = sample_population(args.n, args.samples, args.seed)
        pairs = None
    violations = run_verification(networks, args.suite, monotonicity_pairs=pairs)
    print(f"checked {len(networks)} networks (n={args.n}, suite={args.suite})")
    for v in violations:
        print(f"violation [{v.check}]: {v.detail}")
        print("reproducer:")
        sys.stdout.write(network_to_text(v.network))
    print(f"violations: {len(violations)}")
    return 1 if violations else 0


def cmd_gen(args) -> int:
    if args.kind == "long-transient" and args.n < 3:
        print("error: long-transient requires n >= 3", file=sys.stderr)
        return 2
    if args.kind == "random":
        net = random_network(args.n, args.seed)
    elif args.kind == "commutative":
        net = random_commutative(args.n, args.seed, args.parts)
    elif args.kind == "negation":
        net = random_negation_on_subcubes(args.n, args.seed, args.parts)
    elif args.kind == "constant":
        net = random_constant_on_arrangements(args.n, args.seed, args.parts)
    else:
        net = long_transient_trapping(args.n)
    text = network_to_text(net)
    try:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    report = classify_network(net)
    transient, period = transient_and_period(net)
    summary = ", ".join(
        f"{name}: {'true' if getattr(report, name) else 'false'}"
        for name in ("trapping", "commutative", "marseille", "lille", "globally_idempotent")
    )
    print(f"wrote {args.out} (n={args.n}, {summary}, transient={transient}, period={period})")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trapnets",
        description="Trapspace analysis of Boolean networks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="classify a network and count its trapspaces")
    p.add_argument("file")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--minimal-only", action="store_true",
                   help="skip full enumeration; allows n up to 16")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("graph", help="export a dynamics graph as DOT")
    p.add_argument("file")
    p.add_argument("--kind", choices=("async", "ga", "tg"), default="async")
    p.add_argument("--layered", action="store_true",
                   help="stack all three layers regardless of --kind")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("equiv", help="compare the trapspace structure of two networks")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.add_argument("--mode", choices=("trapspace", "min"), default="trapspace")
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("verify", help="sweep a population against the structural claims")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--samples", type=_positive_int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--suite", choices=("all", "theorems", "diagrams", "closure"), default="all")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="generate a network and write its truth table")
    p.add_argument("--kind", required=True,
                   choices=("random", "commutative", "negation", "constant", "long-transient"))
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--parts", type=_positive_int, default=2)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_gen)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
