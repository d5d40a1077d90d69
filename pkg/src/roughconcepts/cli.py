"""Command-line interface tying the modules together.

Exit codes: 0 success, 1 usage error, 2 parse error, 3 semantic error,
4 resource cap exceeded.  Failures print a single machine-parsable line
``error: <category>: <message>`` to stderr and emit nothing on stdout.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .approx import extent_lower, extent_upper_free, extent_upper_strict, lower_context, upper_context
from .concepts import approximation_maps, indiscernibility_kernels, rough_concept_classes
from .context import ApproximationSpace, FormalContext, definable_attributes, derive_extent
from .errors import ConceptLimitError, ParseError, RoughConceptsError, UndefinedMeasureError
from .formats import (
    FORMATS,
    ContextDocument,
    export_dot,
    guess_format,
    parse_context,
    parse_partition,
    render_context,
)
from .lattice import DEFAULT_MAX_CONCEPTS, ConceptLattice, enumerate_concepts
from .report import build_report
from .rules import Implication, certain_rule, implication_holds, possible_rule, rough_measure

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_SEMANTIC = 3
EXIT_RESOURCE = 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse default exits with 2; usage errors are 1 here
        raise UsageError(message)


def _build_parser() -> _Parser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--context", required=True, metavar="FILE", help="context input file")
    common.add_argument("--format", choices=FORMATS, help="input format (default: by extension)")
    common.add_argument("--partition", metavar="FILE", help="partition file (one block per line)")
    common.add_argument(
        "--partition-by",
        dest="partition_by",
        metavar="ATTRS",
        help="synthesize the partition whose blocks have equal rows on these attributes",
    )
    common.add_argument(
        "--strict-upper",
        dest="strict_upper",
        action="store_true",
        help="use the strict upper extent semantics for extent queries",
    )
    common.add_argument(
        "--max-concepts",
        dest="max_concepts",
        type=int,
        default=DEFAULT_MAX_CONCEPTS,
        help="abort enumeration beyond this many concepts",
    )

    parser = _Parser(prog="roughconcepts", description="Concept lattices with rough approximation.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sub.add_parser("lattice", parents=[common], help="list concepts and covers of the context")

    p = sub.add_parser("approx", parents=[common], help="print an approximation context")
    p.add_argument("--mode", choices=("upper", "lower"), required=True)

    sub.add_parser("definable", parents=[common], help="list definable attributes")

    p = sub.add_parser("extent", parents=[common], help="extent of an attribute set")
    p.add_argument("--attrs", required=True, metavar="A,B,...")
    p.add_argument("--approx", choices=("base", "upper", "lower"), default="base")

    sub.add_parser("assignments", parents=[common], help="conceptual assignment maps and kernels")
    sub.add_parser("rough-classes", parents=[common], help="rough concept classes")

    p = sub.add_parser("rules", parents=[common], help="evaluate an attribute implication")
    p.add_argument("--premise", required=True, metavar="A,B,...")
    p.add_argument("--conclusion", required=True, metavar="A,B,...")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--certain", action="store_true", help="test in the lower approximation")
    group.add_argument("--possible", action="store_true", help="test in the upper approximation")
    group.add_argument("--measure", action="store_true", help="print the exact rough measure")

    p = sub.add_parser("report", parents=[common], help="full analysis report as JSON")
    p.add_argument(
        "--rule",
        action="append",
        default=[],
        metavar="P=>C",
        help="include this implication in the report (repeatable)",
    )

    p = sub.add_parser("export", parents=[common], help="export a lattice diagram")
    p.add_argument("--dot", action="store_true", required=True, help="emit Graphviz DOT text")
    p.add_argument("--labeling", choices=("full", "reduced"), default="full")
    p.add_argument("--which", choices=("base", "upper", "lower"), default="base")

    return parser


def _load_document(args: argparse.Namespace) -> ContextDocument:
    path = Path(args.context)
    fmt = args.format or guess_format(path.name)
    if fmt is None:
        raise UsageError(
            f"cannot infer the format of {path.name!r}; pass --format cxt|csv|json"
        )
    return parse_context(path.read_bytes(), fmt)


def _load_space(args: argparse.Namespace, doc: ContextDocument) -> ApproximationSpace | None:
    ctx = doc.context
    if args.partition and args.partition_by:
        raise UsageError("--partition and --partition-by are mutually exclusive")
    if args.partition:
        return parse_partition(Path(args.partition).read_bytes(), ctx.objects)
    if args.partition_by:
        names = [name.strip() for name in args.partition_by.split(",") if name.strip()]
        return ApproximationSpace.from_attribute_classes(ctx, ctx.attribute_set(*names))
    return doc.partition


def _require_space(args: argparse.Namespace, doc: ContextDocument) -> ApproximationSpace:
    space = _load_space(args, doc)
    if space is None:
        raise UsageError(
            "this command needs --partition, --partition-by, "
            "or a context file with an embedded partition"
        )
    return space


def _attr_list(raw: str) -> list[str]:
    return [name.strip() for name in raw.split(",") if name.strip()]


def _format_lattice(lat: ConceptLattice) -> str:
    ctx = lat.context
    lines = [f"concepts {len(lat)}"]
    for concept in lat.concepts:
        extent = ",".join(ctx.object_names(concept.extent))
        intent = ",".join(ctx.attribute_names(concept.intent))
        lines.append(f"{concept.index} extent={{{extent}}} intent={{{intent}}}")
    lines.append(f"covers {len(lat.covers)}")
    for low, high in lat.covers:
        lines.append(f"{low} -> {high}")
    return "\n".join(lines)


def _parse_rule_option(ctx: FormalContext, raw: str) -> Implication:
    if "=>" not in raw:
        raise UsageError(f"rule {raw!r} must look like premise=>conclusion")
    premise, conclusion = raw.split("=>", 1)
    return Implication.of(ctx, _attr_list(premise), _attr_list(conclusion))


def _dispatch(args: argparse.Namespace) -> str:
    doc = _load_document(args)
    ctx = doc.context
    command = args.command

    if command == "lattice":
        return _format_lattice(enumerate_concepts(ctx, args.max_concepts))

    if command == "approx":
        space = _require_space(args, doc)
        approx = upper_context(space, ctx) if args.mode == "upper" else lower_context(space, ctx)
        return render_context(ContextDocument(doc.format, approx))

    if command == "definable":
        space = _require_space(args, doc)
        return ",".join(ctx.attribute_names(definable_attributes(space, ctx)))

    if command == "extent":
        attrs = ctx.attribute_set(*_attr_list(args.attrs))
        if args.approx == "base":
            result = derive_extent(ctx, attrs)
        else:
            space = _require_space(args, doc)
            if args.approx == "upper":
                compute = extent_upper_strict if args.strict_upper else extent_upper_free
                result = compute(space, ctx, attrs)
            else:
                result = extent_lower(space, ctx, attrs)
        return ",".join(ctx.object_names(result))

    if command == "assignments":
        space = _require_space(args, doc)
        maps = approximation_maps(space, ctx, args.max_concepts)
        possibility, necessity = indiscernibility_kernels(maps)
        return json.dumps(
            {
                "to_upper": list(maps.to_upper),
                "to_lower": list(maps.to_lower),
                "kernels": {
                    "possibility": [list(fiber) for fiber in possibility],
                    "necessity": [list(fiber) for fiber in necessity],
                },
            },
            indent=2,
        )

    if command == "rough-classes":
        space = _require_space(args, doc)
        maps = approximation_maps(space, ctx, args.max_concepts)
        return json.dumps(
            [
                {
                    "members": list(cls.members),
                    "upper": cls.upper_image.index,
                    "lower": cls.lower_image.index,
                }
                for cls in rough_concept_classes(maps)
            ],
            indent=2,
        )

    if command == "rules":
        implication = Implication.of(ctx, _attr_list(args.premise), _attr_list(args.conclusion))
        if args.measure:
            try:
                return str(rough_measure(ctx, implication).value)
            except UndefinedMeasureError:
                return "undefined"
        if args.certain:
            return "true" if certain_rule(_require_space(args, doc), ctx, implication) else "false"
        if args.possible:
            return "true" if possible_rule(_require_space(args, doc), ctx, implication) else "false"
        return "true" if implication_holds(ctx, implication) else "false"

    if command == "report":
        space = _require_space(args, doc)
        rules = [_parse_rule_option(ctx, raw) for raw in args.rule]
        return json.dumps(build_report(space, ctx, rules, args.max_concepts), indent=2)

    if command == "export":
        if args.which == "base":
            target = ctx
        else:
            space = _require_space(args, doc)
            target = upper_context(space, ctx) if args.which == "upper" else lower_context(space, ctx)
        return export_dot(enumerate_concepts(target, args.max_concepts), args.labeling)

    raise UsageError(f"unknown command {command!r}")  # pragma: no cover


def run_cli(argv: list[str]) -> int:
    """Run one CLI invocation; returns the process exit status."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"error: usage: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)

    try:
        output = _dispatch(args)
    except UsageError as exc:
        print(f"error: usage: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"error: parse: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ConceptLimitError as exc:
        print(f"error: resource: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except RoughConceptsError as exc:
        print(f"error: semantic: {exc}", file=sys.stderr)
        return EXIT_SEMANTIC
    except OSError as exc:
        print(f"error: parse: cannot read input: {exc}", file=sys.stderr)
        return EXIT_PARSE

    sys.stdout.write(output if output.endswith("\n") else output + "\n")
    return EXIT_OK


def main() -> None:
    sys.exit(run_cli(sys.argv[1:]))


if __name__ == "__main__":  # pragma: no cover
    main()
