"""Command line interface.

    defshadow validate <document.alg>
    defshadow run --target <name|path> --suite <suite> [--format text|json]
                  [--out PATH] [--degree-bound N] [--seed S]

Exit codes: 0 every check passed (not-applicable does not fail), 1 at
least one check failed, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import sys

from .dsl import DslError
from .ncalg import AlgebraError
from .reporting import emit_report
from .suites import SUITES, TargetError, run_suite


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="defshadow",
        description="Exact verification suites for one-parameter *-algebra families.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_validate = sub.add_parser("validate", help="run the validation gate on a document")
    p_validate.add_argument("document", help="path to an .alg document")
    p_validate.add_argument("--format", choices=("text", "json"), default="text")
    p_validate.add_argument("--out", default=None, help="write the report to this path")
    p_validate.add_argument("--degree-bound", type=int, default=3)
    p_validate.add_argument("--seed", type=int, default=0)

    p_run = sub.add_parser("run", help="run a verification suite")
    p_run.add_argument("--target", required=True, help="fixture name or .alg path")
    p_run.add_argument("--suite", required=True, choices=SUITES)
    p_run.add_argument("--format", choices=("text", "json"), default="text")
    p_run.add_argument("--out", default=None, help="write the report to this path")
    p_run.add_argument("--degree-bound", type=int, default=3)
    p_run.add_argument("--seed", type=int, default=0)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "validate":
        target, suite = args.document, "validate"
    else:
        target, suite = args.target, args.suite
    try:
        report = run_suite(target, suite, seed=args.seed, degree_bound=args.degree_bound)
    except (TargetError, DslError, AlgebraError) as exc:
        print(f"defshadow: {exc}", file=sys.stderr)
        return 2
    body = emit_report(report, fmt=args.format, path=args.out)
    if args.out is None:
        sys.stdout.write(body)
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
