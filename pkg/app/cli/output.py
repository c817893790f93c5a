"""
Rendering of reports as JSON, CSV or plain text.
"""
import csv
import io
import json
from pathlib import Path
from typing import List, Optional, Sequence, Tuple, Union

import click
from pydantic import BaseModel

from app.schemas.common import ErrorReport, Report
from app.schemas.markov import CertificateReport, MarkovBundle, MarkovReport
from app.schemas.orbit import ClosedFormReport, FixedPointBoundsReport, OrbitOrderReport, OrbitReport
from app.schemas.spectrum import CensusReport, ParityReport, SpectrumBundle
from app.schemas.verdict import VerdictReport

FORMATS = ("json", "csv", "text")

Table = Tuple[List[str], List[List]]
Renderable = Union[Report, ErrorReport]


def _checks(checks) -> Table:
    return ["left", "relation", "right", "holds"], [
        [c.left, c.relation, c.right, c.holds] for c in checks
    ]


def _matrix(matrix: Sequence[Sequence[int]]) -> Table:
    header = ["state"] + [f"E{j}" for j in range(1, len(matrix) + 1)]
    return header, [[f"E{i}"] + list(row) for i, row in enumerate(matrix, start=1)]


def result_table(result: BaseModel) -> Table:
    """Rows of the main table of a result schema."""
    if isinstance(result, OrbitReport):
        return ["k", "exact", "decimal"], [[p.k, p.exact, p.decimal] for p in result.points]
    if isinstance(result, SpectrumBundle):
        return ["map", "n", "left", "right", "value", "left_exact", "right_exact"], [
            [s.map, s.n, c.left, c.right, c.value, c.left_exact, c.right_exact]
            for s in result.spectra
            for c in s.cells
        ]
    if isinstance(result, CensusReport):
        return ["map", "m", "j", "observed", "expected", "matches"], [
            [r.map, r.m, r.j, r.observed, r.expected, r.matches] for r in result.rows
        ]
    if isinstance(result, ParityReport):
        return ["left", "right", "value", "expected", "holds"], [
            [c.left, c.right, c.value, c.expected, c.holds] for c in result.cells
        ]
    if isinstance(result, (FixedPointBoundsReport, OrbitOrderReport)):
        return _checks(result.checks)
    if isinstance(result, ClosedFormReport):
        return ["k", "closed_form", "iterate", "holds"], [
            [r.k, r.closed_form, r.iterate, r.holds] for r in result.rows
        ]
    if isinstance(result, VerdictReport):
        if result.certificate is not None:
            return _matrix(result.certificate.matrix)
        return ["k", "length_plus", "length_minus", "length_plus_decimal", "length_minus_decimal"], [
            [w.k, w.length_plus, w.length_minus, w.length_plus_decimal, w.length_minus_decimal]
            for w in result.witnesses
        ]
    if isinstance(result, CertificateReport):
        return _matrix(result.matrix)
    if isinstance(result, MarkovReport):
        return _matrix(result.matrix)
    if isinstance(result, MarkovBundle):
        return ["map", "found", "scheme", "matrix", "r1", "coding"], [
            [r.map, r.found, r.scheme, json.dumps(r.matrix), r.r1.holds if r.r1 else None,
             r.coding.holds if r.coding else None]
            for r in result.reports
        ]
    return [], []


def _summary_row(report: Renderable) -> List:
    if isinstance(report, ErrorReport):
        return [report.beta_spec, "", "", report.error, report.message]
    result = report.result
    tag = getattr(result, "tag", "")
    witnesses = " ".join(str(w.k) for w in getattr(result, "witnesses", []))
    return [report.beta_spec, report.regime, getattr(result, "n", ""), tag, witnesses]


SUMMARY_HEADER = ["beta_spec", "regime", "n", "tag", "witnesses"]


def to_csv(header: Sequence[str], rows: Sequence[Sequence]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def _text_block(report: Renderable) -> str:
    if isinstance(report, ErrorReport):
        return f"{report.beta_spec}: {report.error}: {report.message}\n"
    lines = [
        f"betamorph {report.version}",
        f"beta     {report.beta_spec} = {report.beta.decimal}",
        f"minpoly  {report.beta.minpoly}",
        f"regime   {report.regime}",
    ]
    scalars = {
        key: value
        for key, value in report.result.model_dump().items()
        if isinstance(value, (str, int, float, bool)) or value is None
    }
    lines += [f"{key:<20} {value}" for key, value in scalars.items()]
    if report.passed is not None:
        lines.append(f"{'passed':<20} {report.passed}")
    header, rows = result_table(report.result)
    if rows:
        widths = [max(len(str(cell)) for cell in column) for column in zip(header, *rows)]
        lines.append("")
        for row in [header] + rows:
            lines.append("  ".join(str(cell).ljust(width) for cell, width in zip(row, widths)).rstrip())
    return "\n".join(lines) + "\n"


def render(report: Renderable, fmt: str) -> str:
    if fmt == "json":
        return report.model_dump_json(indent=2) + "\n"
    if fmt == "csv":
        if isinstance(report, ErrorReport):
            return to_csv(SUMMARY_HEADER[:1] + ["error", "message"], [[report.beta_spec, report.error, report.message]])
        header, rows = result_table(report.result)
        return to_csv(header, rows)
    return _text_block(report)


def render_batch(reports: Sequence[Renderable], fmt: str) -> str:
    if fmt == "json":
        return json.dumps([report.model_dump(mode="json") for report in reports], indent=2) + "\n"
    if fmt == "csv":
        return to_csv(SUMMARY_HEADER, [_summary_row(report) for report in reports])
    return "\n".join(_text_block(report) for report in reports)


def emit(text: str, out: Optional[str] = None) -> None:
    """Write to the --out file, or stdout."""
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        click.echo(text, nl=False)
