"""
Rendering of CLI results.

Every result type renders as a plain-text table, JSON (the pydantic schema
of the result) or CSV with a header row. Counts are always decimal strings.
"""

import csv
import io
import json
from typing import Iterable, Iterator, List, Sequence

from .algorithms.core import format_transformation
from .schemas import (
    AbundanceVerdict,
    CountResult,
    OutputFormat,
    RelationClasses,
    RelationResult,
    Transformation,
    ValidationError,
    VerificationReport,
)


def _csv(header: Sequence[str], rows: Iterable[Sequence[object]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue().rstrip("\n")


def _flag(value: bool) -> str:
    return "true" if value else "false"


def render_count(result: CountResult, fmt: OutputFormat) -> str:
    if fmt is OutputFormat.JSON:
        return result.model_dump_json(exclude_none=True)
    if fmt is OutputFormat.CSV:
        return _csv(["n", "m", "k", "what", "r", "value"], [[
            result.n, result.m, result.k, result.what, "" if result.r is None else result.r, result.value,
        ]])
    return str(result.value)


def render_flag(name: str, value: bool, fmt: OutputFormat) -> str:
    """A single true/false verdict, e.g. the check and regular-semigroup commands."""
    if fmt is OutputFormat.JSON:
        return json.dumps({name: value})
    if fmt is OutputFormat.CSV:
        return _csv([name], [[_flag(value)]])
    return _flag(value)


def render_relation(result: RelationResult, fmt: OutputFormat) -> str:
    if fmt is OutputFormat.JSON:
        return result.model_dump_json()
    if fmt is OutputFormat.CSV:
        return _csv(["n", "m", "k", "relation", "method", "a", "b", "related"], [[
            *result.universe.as_tuple(), result.relation.value, result.method.value,
            result.a, result.b, _flag(result.related),
        ]])
    return _flag(result.related)


def render_classes(classes: RelationClasses, fmt: OutputFormat) -> str:
    if fmt is OutputFormat.JSON:
        return classes.model_dump_json()
    if fmt is OutputFormat.CSV:
        return _csv(["class", "element"], (
            [index, element]
            for index, members in enumerate(classes.classes, 1)
            for element in members
        ))
    lines = [f"{classes.kind.value} classes of T{classes.universe}: {len(classes.classes)}"]
    lines.extend(
        f"  {index}. " + "  ".join(format_transformation(a) for a in members)
        for index, members in enumerate(classes.classes, 1)
    )
    return "\n".join(lines)


def render_abundance(verdict: AbundanceVerdict, fmt: OutputFormat) -> str:
    if fmt is OutputFormat.JSON:
        return verdict.model_dump_json()
    if fmt is OutputFormat.CSV:
        def cell(witness):
            return "" if witness is None else " ".join(format_transformation(a) for a in witness)
        return _csv(["left", "right", "left_witness", "right_witness"], [[
            _flag(verdict.left), _flag(verdict.right),
            cell(verdict.left_witness), cell(verdict.right_witness),
        ]])
    lines = [f"left: {_flag(verdict.left)}, right: {_flag(verdict.right)}"]
    for side, witness in (("L*", verdict.left_witness), ("R*", verdict.right_witness)):
        if witness is not None:
            lines.append(f"{side}-class without idempotent: " + "  ".join(format_transformation(a) for a in witness))
    return "\n".join(lines)


def render_element(a: Transformation, fmt: OutputFormat) -> str:
    if fmt is OutputFormat.JSON:
        return json.dumps(format_transformation(a))
    if fmt is OutputFormat.CSV:
        return _csv(["element"], [[a]])
    return format_transformation(a)


def render_elements(elements: Iterable[Transformation], fmt: OutputFormat) -> Iterator[str]:
    """Lines to print for a stream of elements; JSON output is one array."""
    if fmt is OutputFormat.JSON:
        first = True
        yield "["
        for a in elements:
            yield ("  " if first else ", ") + json.dumps(format_transformation(a))
            first = False
        yield "]"
    elif fmt is OutputFormat.CSV:
        yield "element"
        for a in elements:
            yield _csv(["element"], [[a]]).split("\n", 1)[1]
    else:
        for a in elements:
            yield format_transformation(a)


def render_report(report: VerificationReport, fmt: OutputFormat) -> str:
    if fmt is OutputFormat.JSON:
        return report.model_dump_json()
    rows = [
        [
            "" if cell.universe is None else str(cell.universe),
            cell.check,
            _value(cell.expected),
            _value(cell.actual),
            "pass" if cell.passed else "FAIL",
        ]
        for cell in report.cells
    ]
    if fmt is OutputFormat.CSV:
        return _csv(["universe", "check", "expected", "actual", "passed"], rows)

    header = ["universe", "check", "expected", "actual", "result"]
    widths = [max([len(h)] + [len(row[i]) for row in rows]) for i, h in enumerate(header)]
    lines: List[str] = [
        "  ".join(text.ljust(width) for text, width in zip(line, widths)).rstrip()
        for line in [header] + rows
    ]
    lines.append(f"suite {report.suite}: {'pass' if report.overall else 'FAIL'} "
                 f"({len(report.cells) - len(report.failures)}/{len(report.cells)} cells)")
    return "\n".join(lines)


def _value(value) -> str:
    if isinstance(value, bool):
        return _flag(value)
    return str(value)


def format_errors(errors: List[ValidationError], max_errors: int = 5) -> str:
    """Human-readable error listing for stderr."""
    if not errors:
        return ""

    lines = []
    for err in errors[:max_errors]:
        lines.append(f"error: {err.message}")
        if err.suggestion:
            lines.append(f"  >> {err.suggestion}")
    if len(errors) > max_errors:
        lines.append(f"  ... and {len(errors) - max_errors} more issue(s)")
    return "\n".join(lines)
