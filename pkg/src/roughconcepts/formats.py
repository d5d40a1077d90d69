"""Reading and writing contexts, partitions, and DOT diagrams.

Three context formats are supported: Burmeister ``.cxt`` (the FCA
interchange format), CSV with X/blank cells, and a self-describing JSON
document that can also embed a partition.  All renderers are
deterministic and round-trip through their parsers.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from typing import Iterable

from .context import (
    ApproximationSpace,
    FormalContext,
    derive_extent,
    derive_intent,
)
from .errors import ParseError, RoughConceptsError
from .lattice import ConceptLattice

FORMATS = ("cxt", "csv", "json")
_EXTENSIONS = {".cxt": "cxt", ".csv": "csv", ".json": "json"}


@dataclass(frozen=True)
class ContextDocument:
    """A parsed context file: the context plus an optional embedded partition.

    Only the JSON format can carry a partition section.
    """

    format: str
    context: FormalContext
    partition: ApproximationSpace | None = None

    def __post_init__(self) -> None:
        if self.format not in FORMATS:
            raise ValueError(f"unknown format {self.format!r}")
        if self.partition is not None:
            if self.format != "json":
                raise ValueError(f"the {self.format} format cannot carry a partition")
            if self.partition.objects != self.context.objects:
                raise ValueError("embedded partition names a different object universe")


def guess_format(filename: str) -> str | None:
    """Format tag implied by the file extension, or None."""
    lowered = filename.lower()
    for extension, fmt in _EXTENSIONS.items():
        if lowered.endswith(extension):
            return fmt
    return None


def _text(data: str | bytes) -> str:
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not valid UTF-8: {exc}") from None
    return data.replace("\r\n", "\n").replace("\r", "\n")


def parse_context(data: str | bytes, format: str) -> ContextDocument:
    """Parse context data in the given format into a :class:`ContextDocument`."""
    text = _text(data)
    if format == "cxt":
        return ContextDocument("cxt", _parse_cxt(text))
    if format == "csv":
        return ContextDocument("csv", _parse_csv(text))
    if format == "json":
        ctx, partition = _parse_json(text)
        return ContextDocument("json", ctx, partition)
    raise ValueError(f"unknown format {format!r}")


def render_context(doc: ContextDocument) -> str:
    """Deterministic text for the document, parseable back to an equal one."""
    if doc.format == "cxt":
        return _render_cxt(doc.context)
    if doc.format == "csv":
        return _render_csv(doc.context)
    return _render_json(doc)


# -- Burmeister .cxt -----------------------------------------------------------


def _parse_cxt(text: str) -> FormalContext:
    lines = text.split("\n")

    def take(position: int, description: str) -> str:
        if position >= len(lines):
            raise ParseError(f"unexpected end of file, expected {description}", line=len(lines))
        return lines[position]

    if take(0, "header 'B'").strip() != "B":
        raise ParseError("expected header 'B'", line=1)
    if take(1, "blank line").strip():
        raise ParseError("expected blank line after header", line=2)

    def count(position: int, what: str) -> int:
        raw = take(position, f"{what} count").strip()
        if not raw.isdigit():
            raise ParseError(f"missing or invalid {what} count", line=position + 1)
        return int(raw)

    n_objects = count(2, "object")
    n_attributes = count(3, "attribute")
    if take(4, "blank line").strip():
        raise ParseError("expected blank line after counts", line=5)

    def names(start: int, n: int, kind: str) -> list[str]:
        out: list[str] = []
        seen: set[str] = set()
        for k in range(n):
            name = take(start + k, f"{kind} name").strip()
            if not name:
                raise ParseError(f"empty {kind} name", line=start + k + 1)
            if name in seen:
                raise ParseError(f"duplicate {kind} name {name!r}", line=start + k + 1)
            seen.add(name)
            out.append(name)
        return out

    objects = names(5, n_objects, "object")
    attributes = names(5 + n_objects, n_attributes, "attribute")

    row_start = 5 + n_objects + n_attributes
    rows: list[set[int]] = []
    for g in range(n_objects):
        line_no = row_start + g + 1
        raw = take(row_start + g, "incidence row").rstrip()
        if len(raw) != n_attributes:
            raise ParseError(
                f"incidence row {g + 1} has {len(raw)} cells, expected {n_attributes}",
                line=line_no,
            )
        row: set[int] = set()
        for m, char in enumerate(raw):
            if char == "X":
                row.add(m)
            elif char != ".":
                raise ParseError(
                    f"unexpected character {char!r} in incidence row",
                    line=line_no,
                    column=m + 1,
                )
        rows.append(row)

    for extra, line in enumerate(lines[row_start + n_objects :]):
        if line.strip():
            raise ParseError(
                f"unexpected extra incidence row {n_objects + 1}",
                line=row_start + n_objects + extra + 1,
            )

    return FormalContext(tuple(objects), tuple(attributes), tuple(frozenset(r) for r in rows))


def _render_cxt(ctx: FormalContext) -> str:
    out = ["B", "", str(len(ctx.objects)), str(len(ctx.attributes)), ""]
    out.extend(ctx.objects)
    out.extend(ctx.attributes)
    for row in ctx.rows:
        out.append("".join("X" if m in row else "." for m in range(len(ctx.attributes))))
    return "\n".join(out) + "\n"


# -- CSV -------------------------------------------------------------------


def _parse_csv(text: str) -> FormalContext:
    table = list(csv.reader(io.StringIO(text)))
    if not table or not table[0]:
        raise ParseError("missing header row", line=1)
    header = table[0]
    attributes: list[str] = []
    seen: set[str] = set()
    for j, cell in enumerate(header[1:], start=2):
        name = cell.strip()
        if not name:
            raise ParseError("empty attribute name in header", line=1, column=j)
        if name in seen:
            raise ParseError(f"duplicate attribute name {name!r}", line=1, column=j)
        seen.add(name)
        attributes.append(name)

    objects: list[str] = []
    rows: list[set[int]] = []
    seen_objects: set[str] = set()
    for i, record in enumerate(table[1:], start=2):
        if not record:
            continue
        if len(record) != len(header):
            raise ParseError(
                f"row has {len(record)} cells, expected {len(header)}", line=i
            )
        name = record[0].strip()
        if not name:
            raise ParseError("empty object name", line=i, column=1)
        if name in seen_objects:
            raise ParseError(f"duplicate object name {name!r}", line=i, column=1)
        seen_objects.add(name)
        row: set[int] = set()
        for j, cell in enumerate(record[1:], start=2):
            mark = cell.strip()
            if mark in ("X", "x"):
                row.add(j - 2)
            elif mark:
                raise ParseError(f"unexpected cell value {cell!r}", line=i, column=j)
        objects.append(name)
        rows.append(row)

    return FormalContext(tuple(objects), tuple(attributes), tuple(frozenset(r) for r in rows))


def _render_csv(ctx: FormalContext) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow([""] + list(ctx.attributes))
    for g, row in enumerate(ctx.rows):
        writer.writerow(
            [ctx.objects[g]] + ["X" if m in row else "" for m in range(len(ctx.attributes))]
        )
    return buffer.getvalue()


# -- JSON -------------------------------------------------------------------


def _string_list(data: dict, key: str) -> list[str]:
    value = data.get(key)
    if not isinstance(value, list) or not all(isinstance(x, str) for x in value):
        raise ParseError(f"{key!r} must be an array of strings")
    return value


def _parse_json(text: str) -> tuple[FormalContext, ApproximationSpace | None]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", line=exc.lineno, column=exc.colno) from None
    if not isinstance(data, dict):
        raise ParseError("top level must be a JSON object")
    unknown = set(data) - {"objects", "attributes", "incidence", "partition"}
    if unknown:
        raise ParseError(f"unknown keys: {sorted(unknown)}")

    objects = _string_list(data, "objects")
    attributes = _string_list(data, "attributes")
    incidence = data.get("incidence", [])
    if not isinstance(incidence, list):
        raise ParseError("'incidence' must be an array of [object, attribute] pairs")
    pairs: list[tuple[str, str]] = []
    for k, entry in enumerate(incidence):
        if (
            not isinstance(entry, list)
            or len(entry) != 2
            or not all(isinstance(x, str) for x in entry)
        ):
            raise ParseError(f"incidence[{k}] must be an [object, attribute] name pair")
        pairs.append((entry[0], entry[1]))
    try:
        context = FormalContext.from_pairs(objects, attributes, pairs)
    except RoughConceptsError as exc:
        raise ParseError(str(exc)) from None

    partition = None
    raw_partition = data.get("partition")
    if raw_partition is not None:
        if not isinstance(raw_partition, list) or not all(
            isinstance(block, list) and all(isinstance(x, str) for x in block)
            for block in raw_partition
        ):
            raise ParseError("'partition' must be an array of arrays of object names")
        try:
            partition = ApproximationSpace.from_names(objects, raw_partition)
        except RoughConceptsError as exc:
            raise ParseError(str(exc)) from None
    return context, partition


def _render_json(doc: ContextDocument) -> str:
    ctx = doc.context
    payload: dict = {
        "objects": list(ctx.objects),
        "attributes": list(ctx.attributes),
        "incidence": [[ctx.objects[g], ctx.attributes[m]] for g, m in ctx.pairs()],
    }
    if doc.partition is not None:
        payload["partition"] = [
            [ctx.objects[g] for g in sorted(block)] for block in doc.partition.blocks
        ]
    return json.dumps(payload, indent=2) + "\n"


# -- partitions -----------------------------------------------------------


def parse_partition(data: str | bytes, objects: Iterable[str]) -> ApproximationSpace:
    """Parse a block list over the given objects into an approximation space.

    Accepts one comma-separated block per line, or brace-delimited
    blocks which may share a line; ``#`` starts a comment.  The blocks
    must use every object exactly once.
    """
    text = _text(data)
    universe = tuple(objects)
    known = set(universe)
    blocks: list[list[str]] = []
    seen: dict[str, int] = {}

    def add_block(raw: str, line_no: int) -> None:
        names = [part.strip() for part in raw.split(",")]
        names = [name for name in names if name]
        if not names:
            raise ParseError("empty block", line=line_no)
        for name in names:
            if name not in known:
                raise ParseError(f"unknown object name {name!r}", line=line_no)
            if name in seen:
                raise ParseError(
                    f"object {name!r} already placed in a block on line {seen[name]}",
                    line=line_no,
                )
            seen[name] = line_no
        blocks.append(names)

    for line_no, raw_line in enumerate(text.split("\n"), start=1):
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        if "{" in line or "}" in line:
            rest = line
            while "{" in rest:
                open_at = rest.index("{")
                close_at = rest.find("}", open_at)
                if close_at < 0:
                    raise ParseError("unclosed '{' in block list", line=line_no)
                if rest[:open_at].strip(", "):
                    raise ParseError("unexpected text outside braces", line=line_no)
                add_block(rest[open_at + 1 : close_at], line_no)
                rest = rest[close_at + 1 :]
            if rest.strip(", "):
                raise ParseError("unexpected text outside braces", line=line_no)
        else:
            add_block(line, line_no)

    missing = [name for name in universe if name not in seen]
    if missing:
        raise ParseError("objects not covered by any block: " + ", ".join(missing))
    return ApproximationSpace.from_names(universe, blocks)


# -- DOT export ----------------------------------------------------------------


def _dot_escape(label: str) -> str:
    return label.replace("\\", "\\\\").replace('"', '\\"')


def export_dot(lattice: ConceptLattice, labeling: str = "full") -> str:
    """Graphviz text for the Hasse diagram: one node per concept, one edge per cover.

    ``full`` labels every node with its whole extent and intent;
    ``reduced`` prints each attribute only at its attribute concept and
    each object only at its object concept, diagram style.
    """
    if labeling not in ("full", "reduced"):
        raise ValueError(f"unknown labeling {labeling!r}")
    ctx = lattice.context
    labels: dict[int, str] = {}
    if labeling == "full":
        for concept in lattice.concepts:
            intent = _dot_escape(", ".join(ctx.attribute_names(concept.intent)))
            extent = _dot_escape(", ".join(ctx.object_names(concept.extent)))
            labels[concept.index] = f"{{{intent}}}\\n{{{extent}}}"
    else:
        attr_home: dict[int, list[int]] = {}
        for m in range(len(ctx.attributes)):
            home = lattice.concept_with_extent(derive_extent(ctx, frozenset({m})))
            attr_home.setdefault(home.index, []).append(m)
        object_home: dict[int, list[int]] = {}
        for g in range(len(ctx.objects)):
            extent = derive_extent(ctx, derive_intent(ctx, frozenset({g})))
            home = lattice.concept_with_extent(extent)
            object_home.setdefault(home.index, []).append(g)
        for concept in lattice.concepts:
            attrs = _dot_escape(
                ", ".join(ctx.attributes[m] for m in attr_home.get(concept.index, []))
            )
            objs = _dot_escape(
                ", ".join(ctx.objects[g] for g in object_home.get(concept.index, []))
            )
            if attrs and objs:
                labels[concept.index] = f"{attrs}\\n{objs}"
            else:
                labels[concept.index] = attrs or objs

    lines = ["digraph concept_lattice {", "  rankdir=BT;", "  node [shape=box];"]
    for concept in lattice.concepts:
        lines.append(f'  c{concept.index} [label="{labels[concept.index]}"];')
    for low, high in lattice.covers:
        lines.append(f"  c{low} -> c{high};")
    lines.append("}")
    return "\n".join(lines) + "\n"
