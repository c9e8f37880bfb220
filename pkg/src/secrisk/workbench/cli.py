"""Command-line interface.

Exit codes: 0 on success, 1 on validation or parse errors, 2 on I/O
errors (including a locked run store). The SECRISK_STORE environment
variable names the default store directory; `--store DIR` overrides it.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import os
import sys

from ..errors import ScenarioParseError, SecriskError, StoreLockedError, ValidationError
from ..fusion import MatrixKind, fuse_linguistic, fuse_quant, fusion_matrix
from ..risk_position import Orientation
from ..scales import FusedTerm, LinguisticTerm, fused_term_score, parse_term, term_score
from .compare import compare_scenarios, render_delta
from .report import (
    render_priority_table,
    render_risk_position,
    render_structured,
    render_text,
    report_to_dict,
    run_report,
)
from .scenario import load_scenario
from .store import store_run

STORE_ENV_VAR = "SECRISK_STORE"


def _render_scale(which: str) -> str:
    lines = []
    if which == "individual":
        lines.append("Individual 5-point scale")
        for term in LinguisticTerm:
            lines.append(f"  {term.code:<2} {term.long_name:<10} {term_score(term)}")
    else:
        lines.append("Fused 9-point scale")
        for term in FusedTerm:
            lines.append(f"  {term.code:<3} {fused_term_score(term)}")
    return "\n".join(lines) + "\n"


def _render_matrix(kind: MatrixKind) -> str:
    matrix = fusion_matrix(kind)
    if kind is MatrixKind.QUANTITATIVE:
        cell_text = lambda a, b: str(matrix.cell(a, b))
        title = "Quantitative fused scale"
    else:
        cell_text = lambda a, b: matrix.cell(a, b).code
        title = "Linguistic fused scale"
    width = max(
        max(len(cell_text(a, b)) for a in matrix.terms for b in matrix.terms),
        max(len(t.code) for t in matrix.terms),
    )
    lines = [
        title,
        "rows: scale 1 (e.g. threats); columns: scale 2 (e.g. business impact)",
        "",
        "   " + "  ".join(t.code.rjust(width) for t in matrix.terms),
    ]
    for a in matrix.terms:
        cells = "  ".join(cell_text(a, b).rjust(width) for b in matrix.terms)
        lines.append(f"{a.code:<3}{cells}")
    return "\n".join(lines) + "\n"


def cmd_scale(args) -> int:
    print(_render_scale(args.which), end="")
    return 0


def cmd_fuse(args) -> int:
    a = parse_term(args.term_a)
    b = parse_term(args.term_b)
    if args.linguistic:
        print(fuse_linguistic(a, b).code)
    elif args.quantitative:
        print(fuse_quant(a, b))
    else:
        print(f"{fuse_linguistic(a, b).code} ({fuse_quant(a, b)})")
    return 0


def cmd_matrix(args) -> int:
    print(_render_matrix(MatrixKind(args.kind)), end="")
    return 0


def _load_with_orientation(path: str, orientation_text: "str | None"):
    scenario = load_scenario(path)
    if orientation_text is not None:
        scenario = dataclasses.replace(
            scenario, orientation=Orientation.from_text(orientation_text)
        )
    return scenario


def cmd_risk_position(args) -> int:
    scenario = _load_with_orientation(args.scenario, args.orientation)
    print(render_risk_position(run_report(scenario)), end="")
    return 0


def cmd_prioritize(args) -> int:
    scenario = load_scenario(args.scenario)
    report = run_report(scenario)
    if args.format == "structured":
        doc = {
            "schema_version": 1,
            "kind": "priority_vector",
            "label": report.label,
            "priorities": report_to_dict(report)["priorities"],
        }
        print(json.dumps(doc, indent=2, ensure_ascii=False))
    else:
        print(render_priority_table(report), end="")
    return 0


def cmd_report(args) -> int:
    scenario = load_scenario(args.scenario)
    report = run_report(scenario)
    if args.format == "structured":
        print(render_structured(report), end="")
    else:
        print(render_text(report), end="")

    store_dir = args.store
    if store_dir is _STORE_FROM_ENV:
        store_dir = os.environ.get(STORE_ENV_VAR)
        if not store_dir:
            raise ScenarioParseError(
                f"--store given without a directory and {STORE_ENV_VAR} is not set"
            )
    if store_dir is not None:
        run_id = store_run(scenario, report, store_dir)
        print(f"stored run {run_id} in {store_dir}", file=sys.stderr)
    if args.figures is not None:
        from .figures import render_report_figures  # defers the matplotlib import

        paths = render_report_figures(report, args.figures)
        for path in paths:
            print(f"wrote figure {path}", file=sys.stderr)
    return 0


def cmd_compare(args) -> int:
    delta = compare_scenarios(load_scenario(args.scenario_a), load_scenario(args.scenario_b))
    print(render_delta(delta), end="")
    return 0


def cmd_validate(args) -> int:
    try:
        load_scenario(args.scenario)
    except ScenarioParseError as exc:
        print(exc)
        return 1
    except ValidationError as exc:
        for line in str(exc).splitlines():
            print(line)
        return 1
    print(f"{args.scenario}: OK")
    return 0


# Sentinel for `--store` used as a bare flag (directory comes from the env).
_STORE_FROM_ENV = "\0store-from-env"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="secrisk",
        description="Country risk-position scoring and asset prioritization workbench.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("scale", help="print a rating scale")
    p.add_argument("action", choices=["show"])
    p.add_argument("which", choices=["individual", "fused"])
    p.set_defaults(func=cmd_scale)

    p = sub.add_parser("fuse", help="fuse two individual-scale terms")
    p.add_argument("term_a")
    p.add_argument("term_b")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--quantitative", action="store_true")
    group.add_argument("--linguistic", action="store_true")
    p.set_defaults(func=cmd_fuse)

    p = sub.add_parser("matrix", help="print a 5x5 fusion matrix")
    p.add_argument("kind", choices=["linguistic", "quantitative"])
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("risk-position", help="print a scenario's risk position")
    p.add_argument("scenario")
    p.add_argument("--orientation", choices=["literal", "oriented"], default=None)
    p.set_defaults(func=cmd_risk_position)

    p = sub.add_parser("prioritize", help="print a scenario's priority vector")
    p.add_argument("scenario")
    p.add_argument("--format", choices=["text", "structured"], default="text")
    p.set_defaults(func=cmd_prioritize)

    p = sub.add_parser("report", help="print the full assessment report")
    p.add_argument("scenario")
    p.add_argument("--format", choices=["text", "structured"], default="text")
    p.add_argument("--store", nargs="?", const=_STORE_FROM_ENV, default=None, metavar="DIR")
    p.add_argument("--figures", default=None, metavar="DIR", help="also render figures into DIR")
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("compare", help="diff two scenarios' rankings")
    p.add_argument("scenario_a")
    p.add_argument("scenario_b")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("validate", help="check a scenario document's invariants")
    p.add_argument("scenario")
    p.set_defaults(func=cmd_validate)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except StoreLockedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ScenarioParseError, ValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except SecriskError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entrypoint() -> None:
    raise SystemExit(main())
