"""Command line interface.

Exit codes: 0 success, 1 bad input (parse errors, domain errors,
contradictory assertions), 2 internal-consistency failure (an exact
cross-check disagreed, or the self-test found a mismatch).
"""

from __future__ import annotations

import argparse
import json
import sys

from .classifier import load_tb_table
from .errors import ContradictionError, DomainError, InternalConsistencyError, ParseError
from .report import ReportOptions, braid_report, expression_report, render_text, selftest_report


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="braidpos",
        description="Exact braid-closure invariants and certificate-backed "
        "positivity verdicts.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--json", action="store_true", help="emit the JSON report")
        p.add_argument(
            "--enable-conjectural",
            action="store_true",
            help="allow the conjectural twisted-double rule (certificates are marked)",
        )
        p.add_argument(
            "--tb-table",
            metavar="FILE",
            help="TB table file: name<TAB>tb-value<TAB>source-note per line",
        )

    analyze = sub.add_parser("analyze", help="classify a knot expression")
    analyze.add_argument("expression", help='e.g. "twist(1)" or "mirror(T(2,3))"')
    add_common(analyze)

    braid = sub.add_parser("braid", help="invariants of a braid closure")
    braid.add_argument("word", help='e.g. "s1^3 @2" or "b2,5 b1,5 @5"')
    add_common(braid)

    selftest = sub.add_parser("selftest", help="run the built-in cross-checks")
    add_common(selftest)

    serve = sub.add_parser("serve", help="run the HTTP service")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)
    return parser


def _options(args: argparse.Namespace) -> ReportOptions:
    table = load_tb_table(args.tb_table) if getattr(args, "tb_table", None) else None
    return ReportOptions(
        enable_conjectural=getattr(args, "enable_conjectural", False), tb_table=table
    )


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "serve":
        import uvicorn

        from .service import app

        uvicorn.run(app, host=args.host, port=args.port)
        return 0

    try:
        options = _options(args)
        if args.command == "analyze":
            report = expression_report(args.expression, options)
            code = 0
        elif args.command == "braid":
            report = braid_report(args.word, options)
            code = 0
        else:
            report = selftest_report(options)
            code = 0 if report["passed"] else 2
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 1
    except (DomainError, ContradictionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except InternalConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return 2

    if args.json:
        print(json.dumps(report, indent=2))
    else:
        print(render_text(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
