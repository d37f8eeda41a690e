"""Command-line front end.

Exit codes: 0 ok, 1 domain error, 2 resource guard, 3 I/O.
Anywhere a file path is expected, ``zoo:<name>[:<params>]`` builds a named
interaction instead, e.g. ``zoo:k-exclusion:3`` or ``zoo:n-lane:1,2``.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import zoo
from .algebra import WedgeSpec, box, wedge
from .classify import classify
from .configspace import DEFAULT_FAMILY, BudgetError, check_iq_bounded
from .consv import format_rational
from .core import Interaction, InteractionError, interaction_to_dict, loads
from .relations import SizeGuardError
from .report import analyze, to_dot

EXIT_OK, EXIT_DOMAIN, EXIT_RESOURCE, EXIT_IO = 0, 1, 2, 3


class CLIIOError(Exception):
    pass


def load_interaction(path: str) -> Interaction:
    if path.startswith("zoo:"):
        return zoo.parse_spec(path[4:])
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise CLIIOError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return loads(text)
    except json.JSONDecodeError as exc:
        raise CLIIOError(f"{path} is not valid JSON: {exc.msg}") from None


def _emit(text: str, out: str | None) -> None:
    if out:
        try:
            Path(out).write_text(text)
        except OSError as exc:
            raise CLIIOError(f"cannot write {out}: {exc.strerror}") from None
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def cmd_analyze(args) -> int:
    inter = load_interaction(args.path)
    report = analyze(inter, identify_class=not args.no_identify)
    if args.format == "json":
        _emit(json.dumps(report.to_json(), indent=2), args.output)
    else:
        _emit(report.to_text(), args.output)
    return EXIT_OK


def _catalog_table(catalog) -> str:
    rows = [("#", "dim", "separable", "name", "edges", "basis")]
    for i, rec in enumerate(catalog):
        basis = " | ".join(" ".join(format_rational(x) for x in v) for v in rec.basis) or "-"
        rows.append(
            (str(i), str(rec.dim), str(rec.separable).lower(), rec.name or "-",
             str(len(rec.representative.undirected_edges())), basis)
        )
    widths = [max(len(r[c]) for r in rows) for c in range(len(rows[0]) - 1)]
    lines = ["  ".join(r[c].ljust(widths[c]) for c in range(len(widths))) + "  " + r[-1] for r in rows]
    return "\n".join(line.rstrip() for line in lines)


def cmd_classify(args) -> int:
    catalog = classify(args.kappa, separable_only=args.separable)
    if args.format == "json":
        data = catalog.to_json()
        data["separable_only"] = args.separable
        _emit(json.dumps(data, indent=2), args.output)
    else:
        _emit(_catalog_table(catalog), args.output)
    return EXIT_OK


def cmd_iq(args) -> int:
    inter = load_interaction(args.path)
    report = check_iq_bounded(inter, args.graphs, budget=args.budget, stop_on_fail=not args.all)
    if args.format == "json":
        _emit(json.dumps(report.to_json(), indent=2), args.output)
    else:
        lines = [f"verdict {report.verdict}"]
        for a in report.analyses:
            lines.append(
                f"  {str(a.site_graph):<12} configs {a.component_labels.size:>8}  "
                f"components {a.n_components:>6}  fibers {a.n_fibers:>6}  {a.verdict}"
            )
        fail = report.failure
        if fail is not None:
            eta, other = fail.witness
            lines.append(f"witness on {fail.site_graph}: {eta} and {other} share conserved sums but are not connected")
        else:
            lines.append("note: PASS covers only the graphs listed")
        _emit("\n".join(lines), args.output)
    return EXIT_OK


def cmd_combine(args) -> int:
    if args.wedge:
        a, b = (load_interaction(p) for p in args.wedge)
        result = wedge(WedgeSpec(a, b, args.base_left, args.base_right))
    else:
        a, b = (load_interaction(p) for p in args.box)
        result = box(a, b)
    _emit(json.dumps(interaction_to_dict(result)), args.output)
    return EXIT_OK


def cmd_export_dot(args) -> int:
    inter = load_interaction(args.path)
    _emit(to_dot(inter), args.output)
    return EXIT_OK


def cmd_zoo(args) -> int:
    if args.zoo_cmd == "list":
        lines = []
        for entry in zoo.ZOO.values():
            params = ",".join(entry.params) or "-"
            lines.append(f"{entry.name:<26} params {params:<13} {entry.description}")
        _emit("\n".join(lines), None)
        return EXIT_OK
    inter = zoo.build(args.name, *args.params)
    _emit(json.dumps(interaction_to_dict(inter)), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="interactions", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="conserved quantities and structure of one interaction")
    p.add_argument("path")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--no-identify", action="store_true", help="skip the class lookup")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("classify", help="equivalence classes of interactions on {0..kappa}")
    p.add_argument("kappa", type=int)
    p.add_argument("--separable", action="store_true")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("iq", help="bounded irreducible-quantification check")
    p.add_argument("path")
    p.add_argument("--graphs", default=DEFAULT_FAMILY)
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--all", action="store_true", help="keep going after the first failure")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_iq)

    p = sub.add_parser("combine", help="wedge sum or box product of two interactions")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--wedge", nargs=2, metavar=("A", "B"))
    group.add_argument("--box", nargs=2, metavar=("A", "B"))
    p.add_argument("--base-left", type=int, default=0)
    p.add_argument("--base-right", type=int, default=0)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_combine)

    p = sub.add_parser("export-dot", help="Graphviz DOT of the associated graph")
    p.add_argument("path")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_export_dot)

    p = sub.add_parser("zoo", help="named interactions")
    zsub = p.add_subparsers(dest="zoo_cmd", required=True)
    zsub.add_parser("list")
    zb = zsub.add_parser("build")
    zb.add_argument("name")
    zb.add_argument("params", nargs="*", type=int)
    zb.add_argument("-o", "--output")
    p.set_defaults(func=cmd_zoo)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except (BudgetError, SizeGuardError) as exc:
        print(f"error: resource: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except CLIIOError as exc:
        print(f"error: io: {exc}", file=sys.stderr)
        return EXIT_IO
    except InteractionError as exc:
        print(f"error: domain: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
