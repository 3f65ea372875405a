"""Command-line front end.

Commands: ``table``, ``numbers``, ``verify``, ``export``.  Exit codes:
0 success, 1 check failure or I/O error, 2 usage error.  Outputs are
deterministic: the same configuration always produces byte-identical
bytes (no timestamps, fixed orderings).

``QAPPELL_OUT_DIR`` provides the default output directory: relative
``--out`` paths are resolved under it, and ``export`` without ``--out``
writes there.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .appell import NAMED_KINDS, make_family
from .qcore import QContext, parse_rational
from .render import (
    FORMATS,
    render_numbers,
    render_report_json,
    render_report_text,
    render_tables,
)
from .verify import SUITES, SuiteConfig, run_suite

DEFAULT_QS = "1/2,2/3,1,3/2,2"
DEFAULT_DEGREE = 12


class UsageError(Exception):
    pass


def _parse_q_list(text: str) -> list:
    qs = []
    for part in text.split(","):
        q = parse_rational(part)
        if q <= 0:
            raise UsageError(f"q must be positive, got {part.strip()!r}")
        qs.append(q)
    if not qs:
        raise UsageError("empty q list")
    return qs


def _parse_families(text: str, allow_custom: bool) -> list:
    if text == "all":
        return list(NAMED_KINDS)
    names = [part.strip() for part in text.split(",") if part.strip()]
    if not names:
        raise UsageError("empty family list")
    for name in names:
        if name in NAMED_KINDS:
            continue
        if name == "custom" and allow_custom:
            continue
        raise UsageError(f"unknown family: {name!r}")
    return names


def _load_custom_coeffs(path: str) -> list:
    try:
        data = json.loads(Path(path).read_text())
    except OSError as exc:
        raise UsageError(f"cannot read custom series file: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"custom series file is not valid JSON: {exc}") from exc
    if not isinstance(data, list):
        raise UsageError("custom series file must be a JSON array of p/q strings")
    return data


def _out_path(path: str | None) -> Path | None:
    if path is None:
        return None
    p = Path(path)
    base = os.environ.get("QAPPELL_OUT_DIR")
    if base and not p.is_absolute():
        p = Path(base) / p
    return p


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(text)


def _build_families(args, degree: int) -> list:
    families = _parse_families(args.family, allow_custom=True)
    custom = None
    if "custom" in families:
        if not args.aq:
            raise UsageError("--family custom needs --aq FILE")
        custom = _load_custom_coeffs(args.aq)
    qs = _parse_q_list(args.q)
    fams = []
    for name in families:
        for q in qs:
            try:
                fams.append(
                    make_family(name, QContext(q), degree, custom_coeffs=custom)
                )
            except ValueError as exc:
                raise UsageError(str(exc)) from exc
    return fams


def _cmd_table(args) -> int:
    if args.degree < 0:
        raise UsageError("degree must be >= 0")
    fams = _build_families(args, args.degree)
    _emit(render_tables(fams, args.format), _out_path(args.out))
    return 0


def _cmd_numbers(args) -> int:
    if args.degree < 0:
        raise UsageError("degree must be >= 0")
    fams = _build_families(args, args.degree)
    _emit(render_numbers(fams, args.format), _out_path(args.out))
    return 0


def _cmd_verify(args) -> int:
    if args.format not in ("text", "json"):
        raise UsageError(f"verify supports text or json output, not {args.format!r}")
    families = _parse_families(args.family, allow_custom=False)
    suites = list(SUITES) if args.suite == "all" else [args.suite]
    config = SuiteConfig(
        qs=tuple(_parse_q_list(args.q)),
        degree=args.degree,
        families=tuple(families),
        suites=tuple(suites),
        variants=args.variants == "on",
        tamper=args.tamper,
    )
    try:
        config.validate()
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    report = run_suite(config)
    if args.format == "json":
        _emit(render_report_json(report), _out_path(args.out))
    else:
        _emit(render_report_text(report), _out_path(args.out))
    if args.report is not None:
        _emit(render_report_json(report), _out_path(args.report))
    return 0 if report.all_hard_passed() else 1


def _cmd_export(args) -> int:
    if args.degree < 0:
        raise UsageError("degree must be >= 0")
    fams = _build_families(args, args.degree)
    ext = {"json": "json", "csv": "csv", "latex": "tex", "text": "txt"}[args.format]
    base = _out_path(args.out if args.out is not None else ".")
    base.mkdir(parents=True, exist_ok=True)
    written = []
    for fam in fams:
        qtag = str(fam.q).replace("/", "_")
        stem = f"{fam.name}_q{qtag}_deg{fam.order}"
        if args.what in ("table", "both"):
            path = base / f"{stem}_table.{ext}"
            path.write_text(render_tables([fam], args.format))
            written.append(path)
        if args.what in ("numbers", "both"):
            path = base / f"{stem}_numbers.{ext}"
            path.write_text(render_numbers([fam], args.format))
            written.append(path)
    for path in written:
        sys.stdout.write(f"{path}\n")
    return 0


def _add_common(sub, with_format=True):
    sub.add_argument("--family", default="all", help="family name list or 'all'")
    sub.add_argument("--q", default=DEFAULT_QS, help="comma list of rationals p/q")
    sub.add_argument("--degree", type=int, default=DEFAULT_DEGREE, help="table degree N")
    if with_format:
        sub.add_argument("--format", choices=FORMATS, default="text")
    sub.add_argument("--out", default=None, help="output path (default: stdout)")
    sub.add_argument("--aq", default=None, help="custom determining series JSON file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qappell",
        description="Exact 2D q-Appell polynomial tables and identity verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_table = sub.add_parser("table", help="print the polynomial table A_0..A_N")
    _add_common(p_table)
    p_table.set_defaults(func=_cmd_table)

    p_numbers = sub.add_parser("numbers", help="print the number sequence A_n(0,0)")
    _add_common(p_numbers)
    p_numbers.set_defaults(func=_cmd_numbers)

    p_verify = sub.add_parser("verify", help="run identity verification suites")
    _add_common(p_verify)
    p_verify.add_argument("--suite", choices=SUITES + ("all",), default="core")
    p_verify.add_argument("--variants", choices=("on", "off"), default="on")
    p_verify.add_argument(
        "--report", default=None, help="also write the JSON report to this path"
    )
    p_verify.add_argument(
        "--tamper",
        type=int,
        default=None,
        help="negative control: perturb polys[N] before checking",
    )
    p_verify.set_defaults(func=_cmd_verify)

    p_export = sub.add_parser("export", help="write tables/numbers to files")
    _add_common(p_export)
    p_export.add_argument("--what", choices=("table", "numbers", "both"), default="both")
    p_export.set_defaults(func=_cmd_export)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except OSError as exc:
        sys.stderr.write(f"i/o error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
