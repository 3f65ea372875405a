"""Rendering of tables, number sequences and reports.

Every rational is rendered as an exact ``p/q`` string in every format;
no decimals anywhere.  JSON output round-trips losslessly through
:func:`load_table_json` / :func:`load_numbers_json`.
"""

from __future__ import annotations

import csv
import io
import json

from .appell import AppellFamily
from .polyring import Poly2
from .qcore import format_rational, parse_rational

VERSION = "0.1.0"

FORMATS = ("text", "json", "csv", "latex")


def _q_str(fam: AppellFamily) -> str:
    return format_rational(fam.q)


# -- polynomial tables -------------------------------------------------------


def table_payload(fams: list) -> dict:
    return {
        "version": VERSION,
        "kind": "table",
        "tables": [
            {
                "family": fam.name,
                "q": _q_str(fam),
                "degree": fam.order,
                "polynomials": [p.to_json_terms() for p in fam.polys],
            }
            for fam in fams
        ],
    }


def load_table_json(text: str) -> list:
    """Inverse of the JSON table format: [(family, q, degree, [Poly2, ...]), ...]."""
    data = json.loads(text)
    out = []
    for tab in data["tables"]:
        polys = [Poly2.from_json_terms(t) for t in tab["polynomials"]]
        out.append((tab["family"], parse_rational(tab["q"]), tab["degree"], polys))
    return out


def render_tables(fams: list, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(table_payload(fams), indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["family", "q", "n", "polynomial"])
        for fam in fams:
            for n, p in enumerate(fam.polys):
                w.writerow([fam.name, _q_str(fam), n, p.render_text()])
        return buf.getvalue()
    if fmt == "latex":
        chunks = []
        for fam in fams:
            lines = [
                f"% family={fam.name} q={_q_str(fam)} degree={fam.order}",
                r"\begin{tabular}{rl}",
                r"$n$ & $A_n(x,y)$ \\",
                r"\hline",
            ]
            for n, p in enumerate(fam.polys):
                lines.append(f"${n}$ & ${p.render_latex()}$ \\\\")
            lines.append(r"\end{tabular}")
            chunks.append("\n".join(lines))
        return "\n\n".join(chunks) + "\n"
    if fmt == "text":
        chunks = []
        for fam in fams:
            lines = [f"# family={fam.name} q={_q_str(fam)} degree={fam.order}"]
            lines.extend(p.render_text() for p in fam.polys)
            chunks.append("\n".join(lines))
        return "\n\n".join(chunks) + "\n"
    raise ValueError(f"unknown format: {fmt!r}")


# -- number sequences --------------------------------------------------------


def numbers_payload(fams: list) -> dict:
    return {
        "version": VERSION,
        "kind": "numbers",
        "sequences": [
            {
                "family": fam.name,
                "q": _q_str(fam),
                "degree": fam.order,
                "values": [format_rational(c) for c in fam.numbers],
            }
            for fam in fams
        ],
    }


def load_numbers_json(text: str) -> list:
    data = json.loads(text)
    return [
        (
            seq["family"],
            parse_rational(seq["q"]),
            seq["degree"],
            [parse_rational(v) for v in seq["values"]],
        )
        for seq in data["sequences"]
    ]


def render_numbers(fams: list, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(numbers_payload(fams), indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["family", "q", "n", "value"])
        for fam in fams:
            for n, c in enumerate(fam.numbers):
                w.writerow([fam.name, _q_str(fam), n, format_rational(c)])
        return buf.getvalue()
    if fmt == "latex":
        chunks = []
        for fam in fams:
            lines = [
                f"% family={fam.name} q={_q_str(fam)} degree={fam.order}",
                r"\begin{tabular}{rl}",
                r"$n$ & $A_n$ \\",
                r"\hline",
            ]
            for n, c in enumerate(fam.numbers):
                lines.append(f"${n}$ & ${format_rational(c)}$ \\\\")
            lines.append(r"\end{tabular}")
            chunks.append("\n".join(lines))
        return "\n\n".join(chunks) + "\n"
    if fmt == "text":
        chunks = []
        for fam in fams:
            lines = [f"# family={fam.name} q={_q_str(fam)} degree={fam.order}"]
            lines.extend(format_rational(c) for c in fam.numbers)
            chunks.append("\n".join(lines))
        return "\n\n".join(chunks) + "\n"
    raise ValueError(f"unknown format: {fmt!r}")


# -- verification reports ----------------------------------------------------


def render_report_json(report) -> str:
    return json.dumps(report.to_json(), indent=2) + "\n"


def render_report_text(report) -> str:
    lines = []
    for res in report.results:
        status = "PASS" if res.passed else "FAIL"
        q = format_rational(res.q) if res.q is not None else "*"
        extra = f" variant={res.variant.label()}" if res.variant is not None else ""
        lines.append(f"{status} {res.name} family={res.family} q={q}{extra}")
    hard = report.hard_failures()
    lines.append(
        f"# {len(report.results)} checks, "
        f"{sum(1 for r in report.results if r.passed)} passed, "
        f"hard failures: {len(hard)}"
    )
    return "\n".join(lines) + "\n"
