"""Command-line entry point: ``fanolines verify | list | inspect``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import checks, local

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INCONCLUSIVE = 0, 1, 2, 3


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return v


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fanolines", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run verification checks")
    v.add_argument("--suite", action="append", choices=checks.SUITES + ("all",),
                   help="suite to run (repeatable, default all)")
    v.add_argument("--only", action="append", metavar="ID", help="run only this check id (repeatable)")
    v.add_argument("--json", action="store_true", help="machine-readable report")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--samples", type=_nonneg, default=25, help="random branch samples for the resultant checks")
    v.add_argument("--power-bound", type=_positive, default=20)
    v.add_argument("--step-budget", type=_positive, default=checks.DEFAULT_STEP_BUDGET)

    ls = sub.add_parser("list", help="list check ids")
    ls.add_argument("--json", action="store_true")

    ins = sub.add_parser("inspect", help="analyse a normal-form scenario file")
    ins.add_argument("path", type=Path)
    return parser


def _print_text(results, out) -> None:
    width = max((len(r.id) for r in results), default=0)
    for r in results:
        out.write(f"{r.status.upper():<12} {r.id:<{width}}  {r.computed}\n")
        if r.status == "fail":
            out.write(f"{'':<12} {'':<{width}}  expected: {r.expected}\n")
        if r.note:
            out.write(f"{'':<12} {'':<{width}}  note: {r.note}\n")
    counts = {}
    for r in results:
        counts[r.status] = counts.get(r.status, 0) + 1
    summary = ", ".join(f"{counts[k]} {k}" for k in ("pass", "fail", "inconclusive", "skipped") if k in counts)
    out.write(f"{len(results)} checks: {summary}\n")


def cmd_verify(args, out) -> int:
    try:
        cfg = checks.SuiteConfig(
            suites=tuple(args.suite or ("all",)), seed=args.seed,
            groebner_step_budget=args.step_budget, power_bound=args.power_bound,
            samples=args.samples, output="json" if args.json else "text",
            only=tuple(args.only or ()))
        results = checks.run(cfg)
    except (KeyError, ValueError) as e:
        sys.stderr.write(f"fanolines: {e}\n")
        return EXIT_USAGE
    if args.json:
        json.dump(checks.report_dict(cfg, results), out, indent=2, ensure_ascii=False)
        out.write("\n")
    else:
        _print_text(results, out)
    return checks.exit_status(results)


def cmd_list(args, out) -> int:
    catalog = checks.list_checks()
    if args.json:
        json.dump([{"id": c.id, "suite": c.suite, "description": c.description, "source": c.source,
                    "expected": c.expected} for c in catalog], out, indent=2, ensure_ascii=False)
        out.write("\n")
    else:
        width = max(len(c.id) for c in catalog)
        for c in catalog:
            out.write(f"{c.id:<{width}}  {c.suite:<8}  {c.source}\n")
    return EXIT_OK


def cmd_inspect(args, out) -> int:
    try:
        kind, data, settings = local.parse_scenario(args.path.read_text(encoding="utf-8"))
        F = local.build_cubic(kind, data)
    except (OSError, ValueError) as e:
        sys.stderr.write(f"fanolines: {e}\n")
        return EXIT_USAGE
    out.write(f"kind: {kind}\ncubic: {F}\n")
    if kind in ("type1", "type2"):
        a = settings.get("a", "a")
        eqs = local.curve_through_point(F, a)
        out.write(f"x4 = {eqs.x4_value}\nT2 = {eqs.T2}\nT3 = {eqs.T3}\n")
        rep = local.transversality_at_line(F, a)
        grads = "; ".join("(" + ", ".join(map(str, g)) + ")" for g in rep.gradients)
        out.write(f"gradients: {grads}\nrank: {rep.rank} ({rep.verdict})\n")
    if kind in ("type2", "type2full"):
        img = local.dual_map_image(F)
        out.write("dual map: (" + ", ".join(map(str, img)) + ")\n")
        try:
            pencil = local.residual_pencil(data)
        except ValueError as e:
            out.write(f"pencil: {e}\n")
        else:
            cls = local.classify_pencil(pencil)
            out.write(f"pencil: Q0 = {pencil.Q0}, Q1 = {pencil.Q1}\n"
                      f"common roots: {cls.common_roots}{' (double)' if cls.double_root else ''}\n")
            if "point" in settings and cls.common_roots == 0:
                pt = [int(s) for s in settings["point"].replace(":", " ").replace(",", " ").split()]
                count, kind_ = local.fiber_degree_check(pencil, pt)
                out.write(f"fiber over [{pt[0]}:{pt[1]}]: {count} roots ({kind_})\n")
    return EXIT_OK


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    handler = {"verify": cmd_verify, "list": cmd_list, "inspect": cmd_inspect}[args.command]
    return handler(args, out)


if __name__ == "__main__":
    sys.exit(main())
