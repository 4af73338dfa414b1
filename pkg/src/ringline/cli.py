"""Command-line interface.

Each error path exits with its own code: 2 usage (argparse), 3 ring-spec
errors, 4 build/bound errors, 5 element or point errors, 6 ideal errors,
7 homomorphism errors, and 1 for verification failures. Reports go to
stdout, diagnostics to stderr only.
"""

from __future__ import annotations

import argparse
import sys

from . import export, report, verify
from .errors import (
    BuildError,
    ElementError,
    HomomorphismError,
    IdealError,
    InducedMapError,
    RingSpecError,
)
from .projline import enumerate_points
from .rings import build_ring_from_text, _split_pair

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_SPEC_ERROR = 3
EXIT_BUILD_ERROR = 4
EXIT_ELEMENT_ERROR = 5
EXIT_IDEAL_ERROR = 6
EXIT_HOM_ERROR = 7


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ringline",
        description="Finite commutative rings and their projective lines.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, formats=("text", "json"), ring_required=True):
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument("--ring", required=ring_required,
                         help='ring spec, e.g. "GF(2)[x]/(x^3-x)" or "GF(2)*GF(3)"')
        cmd.add_argument("--max-elements", type=int, default=None,
                         help="enumeration bound (default: RINGLINE_MAX_ELEMENTS or 4096)")
        if formats:
            cmd.add_argument("--format", choices=formats, default=formats[0])
        return cmd

    add("ring-info", "element, unit, ideal and radical structure")
    table = add("ring-table", "print an operation table",
                formats=("text", "csv"))
    table.add_argument("--op", choices=("add", "mul"), default="mul")
    add("line-points", "enumerate the projective line")
    nbrs = add("line-neighbours", "neighbours of one projective point")
    nbrs.add_argument("--point", required=True, help='point, e.g. "(1,x)"')
    add("line-stats", "point counts, neighbourhood profile, jacobson points")
    add("line-graph", "neighbour graph export", formats=("dot", "json"))
    hom = add("hom-induced", "line map induced by a canonical projection")
    hom.add_argument("--ideal", required=True,
                     help='generator element (for <a>) or "jacobson"')
    add("verify", "run the self-check suites", formats=None, ring_required=False)
    return parser


def _resolve_point(line, text):
    stripped = "".join(text.split())
    left, right = _split_pair(stripped, line.ring.label)
    pair = (line.ring.parse_element(left), line.ring.parse_element(right))
    return line.point_for(pair)


def cmd_ring_info(args) -> int:
    ring = build_ring_from_text(args.ring, max_elements=args.max_elements)
    if args.format == "json":
        sys.stdout.write(export.dumps(report.ring_info_dict(ring)))
    else:
        sys.stdout.write(report.ring_info_text(ring))
    return EXIT_OK


def cmd_ring_table(args) -> int:
    ring = build_ring_from_text(args.ring, max_elements=args.max_elements)
    if args.format == "csv":
        sys.stdout.write(
            export.table_to_csv(ring, args.op, order=report.display_order(ring))
        )
    else:
        sys.stdout.write(report.format_table_text(ring, args.op))
    return EXIT_OK


def cmd_line_points(args) -> int:
    ring = build_ring_from_text(args.ring, max_elements=args.max_elements)
    line = enumerate_points(ring)
    if args.format == "json":
        sys.stdout.write(export.dumps(report.line_points_dict(line)))
    else:
        sys.stdout.write(report.line_points_text(line))
    return EXIT_OK


def cmd_line_neighbours(args) -> int:
    ring = build_ring_from_text(args.ring, max_elements=args.max_elements)
    line = enumerate_points(ring)
    point = _resolve_point(line, args.point)
    if args.format == "json":
        sys.stdout.write(export.dumps(report.neighbours_dict(line, point)))
    else:
        sys.stdout.write(report.neighbours_text(line, point))
    return EXIT_OK


def cmd_line_stats(args) -> int:
    ring = build_ring_from_text(args.ring, max_elements=args.max_elements)
    line = enumerate_points(ring)
    if args.format == "json":
        sys.stdout.write(export.dumps(report.line_stats_dict(line)))
    else:
        sys.stdout.write(report.line_stats_text(line))
    return EXIT_OK


def cmd_line_graph(args) -> int:
    ring = build_ring_from_text(args.ring, max_elements=args.max_elements)
    line = enumerate_points(ring)
    if args.format == "json":
        sys.stdout.write(export.dumps(export.line_to_dict(line)))
    else:
        sys.stdout.write(export.line_to_dot(line))
    return EXIT_OK


def cmd_hom_induced(args) -> int:
    ring = build_ring_from_text(args.ring, max_elements=args.max_elements)
    lm = report.build_induced(ring, args.ideal)
    if args.format == "json":
        sys.stdout.write(export.dumps(report.induced_dict(lm)))
    else:
        sys.stdout.write(report.induced_text(lm))
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.ring:
        results = verify.run_ring_suite(args.ring, max_elements=args.max_elements)
    else:
        results = verify.run_default_suite()
    failures = [r for r in results if not r.passed]
    for result in results:
        if result.passed:
            sys.stdout.write(f"PASS  {result.name}\n")
        else:
            sys.stdout.write(f"FAIL  {result.name}: {result.detail}\n")
    sys.stdout.write(
        f"{len(results) - len(failures)}/{len(results)} checks passed\n"
    )
    if failures:
        sys.stderr.write(f"first failure: {failures[0].name}: {failures[0].detail}\n")
        return EXIT_VERIFY_FAILED
    return EXIT_OK


_COMMANDS = {
    "ring-info": cmd_ring_info,
    "ring-table": cmd_ring_table,
    "line-points": cmd_line_points,
    "line-neighbours": cmd_line_neighbours,
    "line-stats": cmd_line_stats,
    "line-graph": cmd_line_graph,
    "hom-induced": cmd_hom_induced,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except RingSpecError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_SPEC_ERROR
    except BuildError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_BUILD_ERROR
    except ElementError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_ELEMENT_ERROR
    except IdealError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_IDEAL_ERROR
    except (HomomorphismError, InducedMapError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_HOM_ERROR


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
