"""Command-line client over the service handlers.

Commands: check, convolve, monoid, gallery.  Exit codes: 0 all checks (or
the queried property) hold, 1 a law or property failed, 2 usage or parse
error.  Structure arguments name a gallery fixture first; prefix a path
with ./ (or use any path separator) to force file mode.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import StarconvError
from .gallery import is_fixture_name
from .schemas import (
    CheckRequest,
    ConvolveRequest,
    FunctionDoc,
    LawReport,
    MonoidRequest,
    StructureDoc,
    parse_function_doc,
    parse_structure_doc,
)
from .service import gallery_doc, run_check, run_convolve, run_monoid


def _load_json(path: str):
    try:
        with open(path, encoding="utf-8") as handle:
            return json.load(handle)
    except OSError as exc:
        raise StarconvError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise StarconvError(f"parse error in {path}: {exc}") from exc


def _structure_arg(arg: str) -> str | StructureDoc:
    """Fixture names win; anything path-like is read as a structure file."""
    looks_like_path = arg.startswith(("./", "../", "/")) or arg.endswith(".json")
    if not looks_like_path and is_fixture_name(arg):
        return arg
    return parse_structure_doc(_load_json(arg))


def _function_arg(path: str) -> FunctionDoc:
    return parse_function_doc(_load_json(path))


def _fmt(value) -> str:
    if value is True:
        return "true"
    if value is False:
        return "false"
    return repr(value) if isinstance(value, float) else str(value)


def _print_witness(witness) -> None:
    at = ",".join(witness.at)
    print(f"  at=({at}) lhs={_fmt(witness.lhs)} rhs={_fmt(witness.rhs)}")


def _print_report_text(report: LawReport) -> None:
    if report.status == "n/a":
        print(f"{report.law}: n/a")
    elif report.status == "pass":
        print(f"{report.law}: PASS")
    else:
        print(f"{report.law}: FAIL ({len(report.witnesses)} witnesses)")
        for witness in report.witnesses:
            _print_witness(witness)


def _cmd_check(args) -> int:
    request = CheckRequest(
        structure=_structure_arg(args.structure), carrier=args.carrier, tol=args.tol
    )
    response = run_check(request)
    if args.format == "json":
        print(json.dumps([r.model_dump() for r in response.reports], indent=2))
    else:
        for report in response.reports:
            _print_report_text(report)
    return 0 if response.ok else 1


def _cmd_convolve(args) -> int:
    request = ConvolveRequest(
        structure=_structure_arg(args.structure),
        f=_function_arg(args.f),
        g=_function_arg(args.g),
        mode=args.mode,
        carrier=args.carrier,
    )
    response = run_convolve(request)
    print(json.dumps(response.values.model_dump(), indent=2))
    return 0


def _cmd_monoid(args) -> int:
    request = MonoidRequest(
        structure=_structure_arg(args.structure),
        f=_function_arg(args.f),
        mode=args.mode,
        carrier=args.carrier,
        tol=args.tol,
    )
    response = run_monoid(request)
    if args.format == "json":
        print(json.dumps(response.model_dump(), indent=2))
    else:
        print("true" if response.holds else "false")
        if response.witness is not None:
            _print_witness(response.witness)
    return 0 if response.holds else 1


def _cmd_gallery(args) -> int:
    doc = gallery_doc(args.fixture, args.carrier)
    payload = json.dumps(doc.model_dump(exclude_none=True), indent=2)
    if args.emit:
        with open(args.emit, "w", encoding="utf-8") as handle:
            handle.write(payload + "\n")
    else:
        print(payload)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="starconv",
        description="Convolutions and axiom checks for finite promonoidal structures",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="run the law suite on a structure or fixture")
    check.add_argument("structure", help="fixture name or structure file")
    check.add_argument("--carrier", choices=["bool", "maxtimes", "maxplus", "nat"])
    check.add_argument("--tol", type=float, default=1e-9)
    check.add_argument("--format", choices=["text", "json"], default="text")
    check.set_defaults(func=_cmd_check)

    conv = sub.add_parser("convolve", help="convolve two function files")
    conv.add_argument("structure")
    conv.add_argument("--f", required=True, help="function file")
    conv.add_argument("--g", required=True, help="function file")
    conv.add_argument("--mode", choices=["upper", "lower"], required=True)
    conv.add_argument("--carrier", choices=["bool", "maxtimes", "maxplus", "nat"])
    conv.set_defaults(func=_cmd_convolve)

    monoid = sub.add_parser("monoid", help="test a function for monoid or convexity laws")
    monoid.add_argument("structure")
    monoid.add_argument("--f", required=True, help="function file")
    monoid.add_argument("--mode", choices=["upper", "lower", "convex"], required=True)
    monoid.add_argument("--carrier", choices=["bool", "maxtimes", "maxplus", "nat"])
    monoid.add_argument("--tol", type=float, default=1e-9)
    monoid.add_argument("--format", choices=["text", "json"], default="text")
    monoid.set_defaults(func=_cmd_monoid)

    gallery = sub.add_parser("gallery", help="emit a fixture as a structure file")
    gallery.add_argument("fixture")
    gallery.add_argument("--carrier", choices=["bool", "maxtimes", "maxplus", "nat"])
    gallery.add_argument("--emit", help="output path (default: stdout)")
    gallery.set_defaults(func=_cmd_gallery)

    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except StarconvError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
