"""Command-line front end.

Exit status: 0 on success, 1 when a checked claim fails, 2 on bad usage or
malformed input.  Data goes to stdout, progress to stderr.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
from fractions import Fraction
from typing import Iterable, Sequence

from . import census
from .classify import classify, map_to_c
from .enumerate import enumerate_graphs, enumerate_regular
from .graph import GraphError
from .graph6 import decode, encode
from .zagreb import zagreb_values

EXIT_OK, EXIT_CLAIM, EXIT_USAGE = 0, 1, 2
SUITES = ("identities", "bounds", "lemma1", "lemma2", "injection", "counts")


class UsageError(Exception):
    pass


def _cell(value: object) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def write_rows(rows: Sequence[dict], fields: Sequence[str], fmt: str, out=None) -> None:
    out = out or sys.stdout
    if fmt == "json":
        out.write(json.dumps([{k: r[k] for k in fields} for r in rows], indent=2) + "\n")
    elif fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(fields)
        for r in rows:
            w.writerow([_cell(r[k]) for k in fields])
    else:
        for r in rows:
            out.write(" ".join(f"{k}={_cell(r[k])}" for k in fields) + "\n")


def _graph_inputs(args: argparse.Namespace) -> Iterable[str]:
    items = args.graph6 or [line.strip() for line in sys.stdin]
    return [s for s in items if s]


def _n_range(args: argparse.Namespace) -> range:
    lo = args.n if args.n is not None else args.n_min
    hi = args.n if args.n is not None else args.n_max
    if lo is None or hi is None:
        raise UsageError("give --n, or both --n-min and --n-max")
    if lo > hi:
        raise UsageError("--n-min exceeds --n-max")
    return range(lo, hi + 1)


def cmd_compute(args: argparse.Namespace) -> int:
    rows = []
    for text in _graph_inputs(args):
        g = decode(text)
        v = zagreb_values(g)
        label = classify(g)
        rows.append(
            {"graph6": encode(g), "n": v.n, "m": v.m, "m1": v.m1, "m2": v.m2,
             "label": label.value, "basis": label.basis, "undefined_m0": label.undefined}
        )
    fields = ("graph6", "n", "m", "m1", "m2", "label", "basis", "undefined_m0")
    write_rows(rows, fields, args.format)
    if args.format == "text":
        for r in rows:
            if r["m"] == 0:
                sys.stdout.write(f"# {r['graph6']}: edgeless, M2/m undefined; counted in B by convention\n")
                continue
            lhs, rhs = Fraction(r["m1"], r["n"]), Fraction(r["m2"], r["m"])
            sign = {"A": ">", "B": "=", "C": "<"}[r["label"]]
            sys.stdout.write(f"# {r['graph6']}: M1/n = {lhs} {sign} M2/m = {rhs}, class {r['label']}\n")
    return EXIT_OK


def cmd_map(args: argparse.Namespace) -> int:
    for text in _graph_inputs(args):
        h = map_to_c(decode(text))
        sys.stdout.write(f"{encode(h)} {classify(h).value}\n")
    return EXIT_OK


def cmd_enumerate(args: argparse.Namespace) -> int:
    graphs = enumerate_graphs(args.n, args.jobs) if args.regular is None else enumerate_regular(args.n, args.regular, args.jobs)
    out = open(args.output, "w") if args.output else sys.stdout
    try:
        count = 0
        for g in graphs:
            out.write(encode(g) + "\n")
            count += 1
    finally:
        if args.output:
            out.close()
    logging.info("%d graphs on %d vertices", count, args.n)
    return EXIT_OK


def cmd_census(args: argparse.Namespace) -> int:
    rows = [census.run_census(n, args.jobs, args.strict_m0) for n in _n_range(args)]
    write_rows([r.as_dict() for r in rows], census.CensusRow.FIELDS, args.format)
    failed = [r.n for r in rows if r.in_hypothesis and not (r.theorem_ok and r.majority_ok)]
    for r in rows:
        if not r.in_hypothesis:
            logging.warning("n=%d is outside the theorem's hypothesis n > 3", r.n)
    return EXIT_CLAIM if failed else EXIT_OK


def _injection_lines(rep: census.InjectionReport) -> list[str]:
    lines = [f"{a} {b} collision: both map to the same class" for a, b in rep.collisions]
    lines += [f"{g6} image not in C" for g6 in rep.off_target]
    for g6, pre in rep.witness_preimages.items():
        if pre:
            lines.append(f"{g6} witness has preimage(s) {' '.join(pre)}")
    if not rep.witness_in_c:
        lines.append("- witness classes are not both in C")
    return lines


def cmd_verify(args: argparse.Namespace) -> int:
    funcs = {
        "identities": census.verify_identities,
        "bounds": census.verify_bounds,
        "lemma1": census.verify_lemma1,
        "lemma2": census.verify_lemma2,
        "counts": census.verify_counts,
    }
    failed = False
    reports = []
    for n in _n_range(args):
        if args.suite == "injection":
            rep = census.verify_injection(n)
            lines = _injection_lines(rep)
            header = (
                f"injection n={n}: {len(lines)} violations "
                f"(domain {rep.domain_size}, image {len(rep.image_codes)}, C {rep.c_size}, C outside image {rep.free_in_c})"
            )
            reports.append(rep.as_dict())
        else:
            rep = funcs[args.suite](n)
            lines = rep.lines()
            header = f"{args.suite} n={n}: {rep.total} violations ({rep.checked} checked)"
            reports.append({"suite": rep.suite, "n": n, "checked": rep.checked, "violations": rep.total, "items": lines})
        failed |= bool(lines)
        if args.format != "json":
            sys.stdout.write(header + "\n")
            for line in lines:
                sys.stdout.write(line + "\n")
    if args.format == "json":
        sys.stdout.write(json.dumps(reports, indent=2) + "\n")
    return EXIT_CLAIM if failed else EXIT_OK


def cmd_sample(args: argparse.Namespace) -> int:
    rep = census.sample_classes(args.n, args.p, args.trials, args.seed, args.jobs)
    write_rows([rep.as_dict()], census.SampleReport.FIELDS, args.format)
    if args.format == "text":
        sys.stdout.write(f"# model: {census.SampleReport.MODEL}\n")
    return EXIT_OK


def cmd_conjecture(args: argparse.Namespace) -> int:
    rows = census.conjecture_report(args.max_n, args.min_n, args.jobs, args.strict_m0)
    write_rows([r.as_dict() for r in rows], census.ConjectureRow.FIELDS, args.format)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="zagreb-census", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true", help="progress on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, fmt: str = "text", jobs: bool = True) -> None:
        p.add_argument("--format", choices=("csv", "json", "text"), default=fmt)
        if jobs:
            p.add_argument("--jobs", type=int, default=1, help="worker processes; results do not depend on it")

    def orders(p: argparse.ArgumentParser) -> None:
        p.add_argument("--n", type=int)
        p.add_argument("--n-min", type=int)
        p.add_argument("--n-max", type=int)

    p = sub.add_parser("compute", help="indices and class of graph6 inputs")
    p.add_argument("graph6", nargs="*", help="graph6 strings; read stdin lines if none")
    common(p, jobs=False)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("map", help="image in C of graphs from A or B")
    p.add_argument("graph6", nargs="*")
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("enumerate", help="all classes of one order as graph6 lines")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--regular", type=int, metavar="R", help="only R-regular graphs")
    p.add_argument("--output", help="file instead of stdout")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("census", help="class counts and theorem verdicts per order")
    orders(p)
    common(p, fmt="csv")
    p.add_argument("--strict-m0", action="store_true", help="leave the edgeless graph out of the counts")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("verify", help="run one exhaustive check suite")
    p.add_argument("--suite", choices=SUITES, required=True)
    orders(p)
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sample", help="class frequencies of random labeled graphs")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--trials", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=0)
    common(p)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("conjecture", help="exact |A| and |B| per order")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--min-n", type=int, default=4)
    p.add_argument("--strict-m0", action="store_true")
    common(p, fmt="csv")
    p.set_defaults(func=cmd_conjecture)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s", stream=sys.stderr)
    if getattr(args, "jobs", 1) < 1:
        parser.error("--jobs must be at least 1")
    try:
        return args.func(args)
    except (UsageError, GraphError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
