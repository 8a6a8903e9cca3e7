"""JSON documents for sequences, matrices and check reports, plus CSV ingestion.

Every number is written as a rational string (``"3"``, ``"-45/8"``); floats
never appear.

SequenceFile::

    {"kind": "local-BPS", "context": {"w": 3, "N": 2},
     "values": ["3", "-45/8"], "provenance": "optional free text"}

MatrixFile::

    {"matrix": "C", "w": 3, "N": 3, "rows": [["1"], ["1", "1"], ["1", "0", "1"]]}
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from pathlib import Path

from .arith import format_rational, parse_rational
from .checks import CheckReport
from .correspondence import CorrespondenceMatrix
from .transforms import InvariantSequence, Kind, TangencyContext


class FormatError(ValueError):
    pass


@dataclass(frozen=True)
class SequenceFile:
    sequence: InvariantSequence
    context: TangencyContext
    provenance: str | None = None

    def __post_init__(self):
        if len(self.sequence) != self.context.N:
            raise FormatError(f"{len(self.sequence)} values but N = {self.context.N}")


def _int_field(doc: dict, key: str) -> int:
    value = doc.get(key)
    if not isinstance(value, int) or isinstance(value, bool):
        raise FormatError(f"field {key!r} must be an integer, got {value!r}")
    return value


def sequence_to_dict(sf: SequenceFile) -> dict:
    doc = {
        "kind": str(sf.sequence.kind),
        "context": {"w": sf.context.w, "N": sf.context.N},
        "values": [format_rational(x) for x in sf.sequence.values],
    }
    if sf.provenance is not None:
        doc["provenance"] = sf.provenance
    return doc


def sequence_from_dict(doc: dict) -> SequenceFile:
    try:
        kind = Kind(doc["kind"])
        ctx_doc = doc["context"]
        ctx = TangencyContext(_int_field(ctx_doc, "w"), _int_field(ctx_doc, "N"))
        raw = doc["values"]
    except (KeyError, TypeError) as exc:
        raise FormatError(f"not a sequence document: {exc}") from exc
    except ValueError as exc:
        raise FormatError(str(exc)) from exc
    if not isinstance(raw, list) or not all(isinstance(v, str) for v in raw):
        raise FormatError("'values' must be a list of rational strings")
    values = tuple(parse_rational(v) for v in raw)
    if len(values) != ctx.N:
        raise FormatError(f"{len(values)} values but N = {ctx.N}")
    return SequenceFile(InvariantSequence(values, kind), ctx, doc.get("provenance"))


def matrix_to_dict(c: CorrespondenceMatrix) -> dict:
    return {
        "matrix": "C^-1" if c.inverse else "C",
        "w": c.w,
        "N": c.size,
        "rows": [[str(x) for x in row[:s]] for s, row in enumerate(c.dense(), 1)],
    }


def matrix_from_dict(doc: dict) -> CorrespondenceMatrix:
    try:
        w, n, raw = _int_field(doc, "w"), _int_field(doc, "N"), doc["rows"]
    except (KeyError, TypeError) as exc:
        raise FormatError(f"not a matrix document: {exc}") from exc
    if len(raw) != n:
        raise FormatError(f"{len(raw)} rows but N = {n}")
    rows = []
    for s, row in enumerate(raw, 1):
        if len(row) != s:
            raise FormatError(f"row {s} has {len(row)} entries, expected {s}")
        entries = {}
        for t, text in enumerate(row, 1):
            x = parse_rational(text)
            if x.denominator != 1:
                raise FormatError(f"entry ({s},{t}) is not an integer: {text}")
            if x and s % t:
                raise FormatError(f"entry ({s},{t}) must vanish since {t} does not divide {s}")
            if x:
                entries[t] = int(x)
        rows.append(entries)
    return CorrespondenceMatrix(w, tuple(rows), doc.get("matrix") == "C^-1")


def report_to_dict(report: CheckReport) -> dict:
    return {
        "check": report.name,
        "context": report.context,
        "overall": report.overall,
        "verdicts": [
            {
                "index": v.index,
                "expected": format_rational(v.expected),
                "actual": format_rational(v.actual),
                "pass": v.passed,
            }
            for v in report.verdicts
        ],
    }


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2)


def read_json(path: str | Path) -> dict:
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON ({exc})") from exc
    if not isinstance(doc, dict):
        raise FormatError(f"{path}: top level must be an object")
    return doc


def read_sequence(path: str | Path) -> SequenceFile:
    return sequence_from_dict(read_json(path))


def write_sequence(sf: SequenceFile, path: str | Path) -> None:
    Path(path).write_text(dumps(sequence_to_dict(sf)) + "\n")


def read_matrix(path: str | Path) -> CorrespondenceMatrix:
    return matrix_from_dict(read_json(path))


def write_matrix(c: CorrespondenceMatrix, path: str | Path) -> None:
    Path(path).write_text(dumps(matrix_to_dict(c)) + "\n")


def ingest_csv(path: str | Path, kind: Kind | str, w: int, provenance: str | None = None) -> SequenceFile:
    """Read a two-column ``degree,value`` CSV. Degrees must run 1..N in order;
    a non-numeric first row is treated as a header."""
    with open(path, newline="") as fh:
        rows = [r for r in csv.reader(fh) if any(cell.strip() for cell in r)]
    if rows and not rows[0][0].strip().lstrip("+-").isdigit():
        rows = rows[1:]
    if not rows:
        raise FormatError(f"{path}: no data rows")
    values = []
    for expected, row in enumerate(rows, 1):
        if len(row) != 2:
            raise FormatError(f"{path}: expected 2 columns, got {len(row)} in {row!r}")
        try:
            degree = int(row[0])
        except ValueError:
            raise FormatError(f"{path}: bad degree {row[0]!r}") from None
        if degree != expected:
            if degree < expected:
                raise FormatError(f"{path}: duplicate or out-of-order degree {degree}")
            raise FormatError(f"{path}: missing degree {expected}")
        values.append(parse_rational(row[1]))
    ctx = TangencyContext(w, len(values))
    return SequenceFile(InvariantSequence(tuple(values), Kind(kind)), ctx, provenance)
