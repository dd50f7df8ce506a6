"""Command line: ``parabolica {report|verify|zoo} <family> <params...>``.

Exit codes: 0 all checks pass, 1 a check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import re
import sys
from importlib import resources
from pathlib import Path

from .models import ModelError, load_zoo, load_zoo_config, zoo_path
from .report import (SCHEMA_VERSION, SUITES, UsageError, parse_model_spec, render_csv, render_json,
                     render_markdown, report_data, run_suites, verify_report)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def golden_dir() -> Path:
    return Path(str(resources.files("parabolica") / "data" / "golden"))


def golden_name(model_id: str) -> str:
    """File name of the golden record of a zoo model, e.g. ``sl_3_R_p1.json``."""
    return re.sub(r"[^A-Za-z0-9]+", "_", model_id).strip("_") + ".json"


def golden_hash(model_id: str, directory: Path | None = None) -> str | None:
    path = (directory or golden_dir()) / golden_name(model_id)
    if not path.is_file():
        return None
    return hashlib.sha256(path.read_bytes()).hexdigest()


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _format(args) -> str:
    if args.json:
        return "json"
    if args.csv:
        return "csv"
    return "md"


def cmd_report(args) -> int:
    if args.spec:
        models = [parse_model_spec(args.spec)]
    else:
        models = [e.build() for e in load_zoo()]
    data = report_data(models, curvature=not args.no_curvature)
    fmt = _format(args)
    text = {"json": render_json, "csv": render_csv, "md": render_markdown}[fmt](data)
    _emit(text, args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    spec = list(args.spec)
    suite = args.suite
    if spec and spec[-1] in SUITES + ("all",):
        if suite and suite != spec[-1]:
            raise UsageError("conflicting suite names")
        suite = spec.pop()
    suite = suite or "all"
    model = parse_model_spec(spec)
    results = run_suites(model, suite)
    data = verify_report(model, results)
    if args.json or args.out:
        _emit(render_json(data), args.out)
    if not args.json:
        for r in results:
            mark = "PASS" if r.passed else "FAIL"
            print(f"{mark} {r.suite:8s} {r.name} ({r.seconds:.2f}s)")
        print(f"{model.name}: {'all checks passed' if data['passed'] else 'FAILED'}")
    if not data["passed"]:
        print(json.dumps(data["first_failure"], sort_keys=True, default=str), file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_zoo(args) -> int:
    if args.spec:
        raise UsageError("zoo takes no model spec")
    config = load_zoo_config()
    rows = []
    for entry in load_zoo():
        model = entry.build()
        digest = golden_hash(entry.id)
        rows.append({"id": entry.id, "family": entry.family.value, "field": entry.field, "params": entry.params,
                     "dims": list(model.dims), "dim": model.dim, "golden": golden_name(entry.id),
                     "golden_sha256": digest, "golden_missing": digest is None})
    data = {"schema_version": SCHEMA_VERSION, "zoo_version": config["version"], "path": zoo_path(),
            "count": len(rows), "models": rows}
    if args.json:
        _emit(render_json(data), args.out)
        return EXIT_OK
    lines = [f"zoo version {data['zoo_version']}: {len(rows)} models", ""]
    for r in rows:
        d = r["dims"]
        mark = "MISSING GOLDEN" if r["golden_missing"] else r["golden_sha256"][:16]
        lines.append(f"{r['id']:14s} dim {r['dim']:3d}  ({d[0]}, {d[1]}, {d[2]})  {mark}")
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="parabolica", description="Exact verification of |1|-graded parabolic models.")
    parser.add_argument("command", choices=("report", "verify", "zoo"))
    parser.add_argument("spec", nargs="*", help="model spec, e.g. 'sl 4 R p2', 'o 3 4', 'o 5 5 spin', 'sp 6 R'")
    fmt = parser.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--md", action="store_true")
    fmt.add_argument("--csv", action="store_true")
    parser.add_argument("--suite", choices=SUITES + ("all",))
    parser.add_argument("--out", help="write output to this path")
    parser.add_argument("--no-curvature", action="store_true", help="skip curvature columns in reports")
    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        handler = {"report": cmd_report, "verify": cmd_verify, "zoo": cmd_zoo}[args.command]
        return handler(args)
    except (UsageError, ModelError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        print("usage: parabolica {report|verify|zoo} <family> <params...> [--json|--md|--csv] "
              "[--suite NAME] [--out PATH]", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
