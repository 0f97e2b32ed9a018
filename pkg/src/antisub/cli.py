"""Command-line interface: list the catalog, verify entries or scenario files.

Exit codes separate outcomes that mean different things:
  0  every check confirmed or unclaimed (or --report-only)
  1  at least one claim was refuted or errored -- a meaningful result, not a crash
  2  bad command-line arguments
  3  unreadable or invalid scenario file
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from pathlib import Path

from . import catalog, embedded, scenario_io
from .report import VerificationReport
from .submersion import SubmersionScenario, verify_scenario


def _thread_count() -> int:
    raw = os.environ.get("ANTISUB_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _print_text(report: VerificationReport, out) -> None:
    print(report.scenario_id, file=out)
    for c in report.checks:
        name = c.name if c.structure is None else f"{c.name}[{c.structure}]"
        claimed = "-" if c.claimed is None else _short(c.claimed)
        computed = "-" if c.computed is None else _short(c.computed)
        line = f"  {name:<34} {c.status:<10} claimed={claimed} computed={computed}"
        if c.detail:
            line += f"  ({c.detail})"
        print(line, file=out)
    counts = report.counts()
    print("  summary: " + ", ".join(f"{v} {k}" for k, v in counts.items()), file=out)


def _short(value) -> str:
    from fractions import Fraction

    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, dict):
        return "{" + ", ".join(f"{k}={_short(v)}" for k, v in value.items()) + "}"
    return str(value)


def _emit(reports: list[VerificationReport], fmt: str, timings: list[float] | None, out) -> None:
    if fmt == "json":
        docs = []
        for i, r in enumerate(reports):
            t = timings[i] if timings is not None else None
            docs.append(scenario_io.report_to_json(r, timing_ms=t))
        payload = docs[0] if len(docs) == 1 else docs
        print(scenario_io.dumps_report(payload), file=out)
    else:
        for r in reports:
            _print_text(r, out)


def _verify_command(args) -> int:
    reports: list[VerificationReport] = []
    timings: list[float] = []

    try:
        if args.file:
            text = Path(args.file).read_text(encoding="utf-8")
            doc = json.loads(text)
            scenario = scenario_io.scenario_from_json(doc)
            start = time.perf_counter()
            if isinstance(scenario, SubmersionScenario):
                rep = verify_scenario(scenario, scenario_id=doc.get("id", Path(args.file).stem))
            else:
                rep = embedded.verify_embedded(scenario, scenario_id=doc.get("id", scenario.case_id),
                                               seed=args.seed, samples=args.samples, tol=args.tol)
            timings.append((time.perf_counter() - start) * 1000.0)
            reports.append(rep)
        elif args.all:
            start = time.perf_counter()
            reports = catalog.verify_all(seed=args.seed, samples=args.samples, tol=args.tol,
                                         threads=_thread_count())
            elapsed = (time.perf_counter() - start) * 1000.0
            timings = [elapsed / max(1, len(reports))] * len(reports)
        else:
            if not args.ids:
                print("verify: give entry ids, --all, or --file PATH", file=sys.stderr)
                return 2
            for entry_id in args.ids:
                start = time.perf_counter()
                reports.append(catalog.verify(entry_id, seed=args.seed,
                                              samples=args.samples, tol=args.tol))
                timings.append((time.perf_counter() - start) * 1000.0)
    except (OSError, json.JSONDecodeError, scenario_io.ScenarioFormatError) as exc:
        print(f"error: cannot load scenario: {exc}", file=sys.stderr)
        return 3
    except catalog.UnknownId as exc:
        print(f"error: unknown catalog id {exc}", file=sys.stderr)
        return 2

    _emit(reports, args.format, timings if args.timing else None, sys.stdout)
    if args.report_only:
        return 0
    return 0 if all(r.ok for r in reports) else 1


def _export_command(args) -> int:
    try:
        entry = catalog.get(args.id)
    except catalog.UnknownId as exc:
        print(f"error: unknown catalog id {exc}", file=sys.stderr)
        return 2
    doc = scenario_io.scenario_to_json(entry.scenario)
    doc["id"] = entry.id
    doc["note"] = entry.note
    print(scenario_io.dumps_report(doc))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="antisub",
        description="Construct and verify anti-invariant Riemannian submersion scenarios.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_list = sub.add_parser("list", help="list catalog entry ids")
    p_list.add_argument("--notes", action="store_true", help="include one-line descriptions")

    p_verify = sub.add_parser("verify", help="verify catalog entries or a scenario file")
    p_verify.add_argument("ids", nargs="*", help="catalog entry ids")
    p_verify.add_argument("--all", action="store_true", help="verify every catalog entry")
    p_verify.add_argument("--file", help="verify a JSON scenario file")
    p_verify.add_argument("--format", choices=("text", "json"), default="text")
    p_verify.add_argument("--seed", type=int, default=0, help="sampling seed (embedded scenarios)")
    p_verify.add_argument("--samples", type=int, default=256, help="sample count (embedded scenarios)")
    p_verify.add_argument("--tol", type=float, default=1e-9, help="tolerance (embedded scenarios)")
    p_verify.add_argument("--report-only", action="store_true",
                          help="always exit 0; refutations stay visible in the report")
    p_verify.add_argument("--timing", action="store_true",
                          help="include wall-clock timing in JSON reports (breaks byte stability)")

    p_export = sub.add_parser("export", help="export a catalog entry as a scenario file")
    p_export.add_argument("id", help="catalog entry id")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "list":
        for entry_id in catalog.list_ids():
            if args.notes:
                print(f"{entry_id:<12} {catalog.get(entry_id).note}")
            else:
                print(entry_id)
        return 0
    if args.command == "verify":
        return _verify_command(args)
    if args.command == "export":
        return _export_command(args)
    return 2


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
