"""
cantor-rank command line.

    cantor-rank eval "canon(w^2+1, 2)"
    cantor-rank rank family.aut --dump-steps steps/
    cantor-rank check-suite --seed 7
"""

import argparse
import logging
import sys
from typing import List, Optional

import orjson

from . import commands
from .errors import EXIT_OK, CantorRankException, CheckSuiteFailure
from .models import EngineModel, SuiteReport
from .util import config

logger = logging.getLogger("cantor_rank.main")


class UsageError(CantorRankException):
    def __init__(self, message: str):
        super().__init__("UsageError", message)


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="cantor-rank",
        description="Cantor-Bendixson ranks, degrees and kernels of closed families in Cantor space.",
    )
    parser.add_argument(
        "--log-level",
        type=str.upper,
        choices=("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"),
        default=None,
        help=f"logging level (default {config.LOG_LEVEL})",
    )
    parser.add_argument("--format", choices=("text", "json"), default="text", dest="output_format")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    p = sub.add_parser("eval", help="evaluate a DSL expression")
    p.add_argument("expr")

    p = sub.add_parser("rank", help="rank and degree of an automaton file")
    p.add_argument("file")
    p.add_argument("--dump-steps", metavar="DIR", default=None)

    p = sub.add_parser("compile", help="compile a DSL expression to an automaton file")
    p.add_argument("expr")
    p.add_argument("out")

    p = sub.add_parser("decompose", help="split into alpha-minimal clopen parts")
    p.add_argument("file")

    p = sub.add_parser("invariants", help="CB-invariants of the trace algebra")
    p.add_argument("file")

    p = sub.add_parser("iso", help="compare two trace algebras by CB-invariants")
    p.add_argument("left")
    p.add_argument("right")

    p = sub.add_parser("lgs", help="least generating set")
    p.add_argument("file")

    p = sub.add_parser("kernel", help="perfect kernel and 2-tree witness")
    p.add_argument("file")

    p = sub.add_parser("acc", help="is the point an accumulation point")
    p.add_argument("file")
    p.add_argument("point")

    p = sub.add_parser("pointrank", help="Cantor-Bendixson rank of a point")
    p.add_argument("file")
    p.add_argument("point")

    p = sub.add_parser("export-dot", help="DOT rendering of an automaton file")
    p.add_argument("file")
    p.add_argument("--out", default=None)

    p = sub.add_parser("check-suite", help="run the acceptance battery")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--random-count", type=int, default=None)
    return parser


def dispatch(args: argparse.Namespace) -> EngineModel:
    if args.command == "eval":
        return commands.cmd_eval(args.expr)
    if args.command == "rank":
        return commands.cmd_rank(args.file, args.dump_steps)
    if args.command == "compile":
        return commands.cmd_compile(args.expr, args.out)
    if args.command == "decompose":
        return commands.cmd_decompose(args.file)
    if args.command == "invariants":
        return commands.cmd_invariants(args.file)
    if args.command == "iso":
        return commands.cmd_iso(args.left, args.right)
    if args.command == "lgs":
        return commands.cmd_lgs(args.file)
    if args.command == "kernel":
        return commands.cmd_kernel(args.file)
    if args.command == "acc":
        return commands.cmd_acc(args.file, args.point)
    if args.command == "pointrank":
        return commands.cmd_pointrank(args.file, args.point)
    if args.command == "export-dot":
        return commands.cmd_export_dot(args.file, args.out)
    if args.command == "check-suite":
        return commands.cmd_check_suite(args.seed, args.random_count)
    raise UsageError(f"unknown command {args.command!r}")


def emit(report: EngineModel, output_format: str) -> None:
    if output_format == "json":
        sys.stdout.write(orjson.dumps(report.model_dump(mode="json"), option=orjson.OPT_INDENT_2).decode())
        sys.stdout.write("\n")
    else:
        for line in report.lines():
            print(line)


def main(argv: Optional[List[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        logging.basicConfig(
            level=args.log_level or config.LOG_LEVEL,
            stream=sys.stderr,
            format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        )
        logger.debug("running %s", args.command)
        report = dispatch(args)
        emit(report, args.output_format)
        if isinstance(report, SuiteReport) and not report.passed:
            raise CheckSuiteFailure(report.failed())
    except CantorRankException as exc:
        print(f"error: {exc.describe()}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return UsageError.exit_code
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
