"""Command-line interface for Ideal Cover

Exit statuses:
    leq / member: 0 true, 1 false, 2 error
    cover: 0 complete, 3 budget exhausted, 2 error
    coverable: 0 yes, 1 no, 3 unknown, 2 error, 4 conclusive methods disagree
"""

import argparse
import sys
from typing import List, Optional

from pydantic import BaseModel, ValidationError

from src.config import Config
from src.engine.backward import coverable_backward
from src.engine.cover import Budget, CoverProcedure, CoverStatus, Verdict, coverable_forward
from src.engine.model import Model
from src.errors import WqoError
from src.models.model_file import load_model
from src.order.downsets import downset_leq, downset_member
from src.order.types import Value
from src.reports import CoverReport, LeqReport, MemberReport, VerdictReport
from src.syntax.literals import parse_downset, parse_type, parse_value
from src.syntax.printer import format_downset
from src.utils.langfuse_manager import RunTracer, flush_langfuse
from src.utils.logger import set_log_level, setup_logger

logger = setup_logger("cli")

EXIT_TRUE = 0
EXIT_FALSE = 1
EXIT_ERROR = 2
EXIT_UNKNOWN = 3
EXIT_DISAGREEMENT = 4

VERDICT_EXIT = {Verdict.YES: EXIT_TRUE, Verdict.NO: EXIT_FALSE, Verdict.UNKNOWN: EXIT_UNKNOWN}


def _emit(args: argparse.Namespace, report: BaseModel, text: str) -> None:
    if args.format == "json":
        print(report.model_dump_json())
    else:
        print(text)


def _budget(args: argparse.Namespace) -> Budget:
    return Budget(
        max_rounds=args.max_rounds,
        max_composite_len=args.max_composite_len,
        max_adds=args.max_adds,
    )


def parse_state(model: Model, text: str) -> Value:
    """
    Read a state literal for a model

    Petri markings may omit the parentheses (``0`` for a one-place net) and
    channel contents may omit the quotes (``a b``, or an empty argument).
    """
    literal = text.strip()
    if model.kind == "petri" and not literal.startswith("("):
        literal = f"({literal})"
    elif model.kind == "flcs" and not literal.startswith('"'):
        literal = f'"{literal}"'
    return parse_value(model.state_type, literal)


def cmd_leq(args: argparse.Namespace) -> int:
    """Decide inclusion of two SREs over a type"""
    ty = parse_type(args.type)
    result = downset_leq(parse_downset(ty, args.lhs), parse_downset(ty, args.rhs))
    report = LeqReport(type=args.type, lhs=args.lhs, rhs=args.rhs, result=result)
    _emit(args, report, "true" if result else "false")
    return EXIT_TRUE if result else EXIT_FALSE


def cmd_member(args: argparse.Namespace) -> int:
    """Decide membership of a value in an SRE"""
    ty = parse_type(args.type)
    result = downset_member(parse_value(ty, args.value), parse_downset(ty, args.sre))
    report = MemberReport(type=args.type, value=args.value, sre=args.sre, result=result)
    _emit(args, report, "true" if result else "false")
    return EXIT_TRUE if result else EXIT_FALSE


def cmd_cover(args: argparse.Namespace) -> int:
    """Compute the cover of an initial state"""
    budget = _budget(args)
    model = load_model(args.model)
    x0 = parse_state(model, args.init)
    result = CoverProcedure(model, x0, budget).run()

    report = CoverReport.from_result(result)
    _emit(args, report, f"{format_downset(result.cover)}\nstatus: {result.status.value}")
    return EXIT_TRUE if result.status is CoverStatus.COMPLETE else EXIT_UNKNOWN


def cmd_coverable(args: argparse.Namespace) -> int:
    """Decide coverability forward, backward or both"""
    budget = _budget(args)
    model = load_model(args.model)
    if args.method != "forward" and model.kind != "petri":
        raise argparse.ArgumentTypeError(
            f"method {args.method} needs a Petri net, got a {model.kind} model"
        )
    x0 = parse_state(model, args.init)
    target = parse_state(model, args.target)

    forward: Optional[Verdict] = None
    backward: Optional[Verdict] = None
    if args.method in ("forward", "both"):
        forward = coverable_forward(model, x0, target, budget)
    if args.method in ("backward", "both"):
        backward = Verdict.YES if coverable_backward(model.source, x0, target) else Verdict.NO

    conclusive = {v for v in (forward, backward) if v not in (None, Verdict.UNKNOWN)}
    consistent = len(conclusive) <= 1
    verdict = conclusive.pop() if len(conclusive) == 1 else Verdict.UNKNOWN

    report = VerdictReport(
        method=args.method,
        verdict=verdict,
        forward=forward,
        backward=backward,
        consistent=consistent,
    )
    lines = [verdict.value]
    if args.method == "both":
        lines += [f"forward: {forward.value}", f"backward: {backward.value}"]
    _emit(args, report, "\n".join(lines))

    if not consistent:
        logger.error(f"Forward verdict {forward.value} contradicts backward verdict {backward.value}")
        return EXIT_DISAGREEMENT
    return VERDICT_EXIT[verdict]


def build_parser() -> argparse.ArgumentParser:
    """Argument parser with one sub-command per query"""
    parser = argparse.ArgumentParser(
        prog="ideal-cover",
        description="Ideals of well-quasi-orders and cover computation for WSTS",
    )
    parser.add_argument("--format", choices=["text", "json"], default="text")
    parser.add_argument(
        "--log-level",
        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
        default=None,
        help="Override LOG_LEVEL",
    )

    # Output flags are accepted after the sub-command too
    output = argparse.ArgumentParser(add_help=False)
    output.add_argument("--format", choices=["text", "json"], default=argparse.SUPPRESS)
    output.add_argument(
        "--log-level",
        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
        default=argparse.SUPPRESS,
    )

    budget = argparse.ArgumentParser(add_help=False)
    budget.add_argument("--max-rounds", type=int, default=Config.DEFAULT_MAX_ROUNDS)
    budget.add_argument("--max-composite-len", type=int, default=Config.DEFAULT_MAX_COMPOSITE_LEN)
    budget.add_argument("--max-adds", type=int, default=Config.DEFAULT_MAX_ADDS)

    commands = parser.add_subparsers(dest="command", required=True)

    leq = commands.add_parser("leq", parents=[output], help="Inclusion of two SREs")
    leq.add_argument("type")
    leq.add_argument("lhs")
    leq.add_argument("rhs")
    leq.set_defaults(handler=cmd_leq)

    member = commands.add_parser(
        "member", parents=[output], help="Membership of a value in an SRE"
    )
    member.add_argument("type")
    member.add_argument("value")
    member.add_argument("sre")
    member.set_defaults(handler=cmd_member)

    cover = commands.add_parser(
        "cover", parents=[output, budget], help="Cover of an initial state"
    )
    cover.add_argument("model", help="Model file")
    cover.add_argument("init", help="Initial state")
    cover.set_defaults(handler=cmd_cover)

    coverable = commands.add_parser(
        "coverable", parents=[output, budget], help="Whether a target state can be covered"
    )
    coverable.add_argument("model", help="Model file")
    coverable.add_argument("init", help="Initial state")
    coverable.add_argument("target", help="State to cover")
    coverable.add_argument("--method", choices=["forward", "backward", "both"], default="forward")
    coverable.set_defaults(handler=cmd_coverable)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """
    Run one command

    Args:
        argv: Arguments without the program name, ``sys.argv[1:]`` by default

    Returns:
        Process exit status
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_ERROR if e.code else EXIT_TRUE

    try:
        Config.validate()
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR

    if args.log_level:
        set_log_level(args.log_level)
    try:
        with RunTracer(f"cli.{args.command}", metadata={"argv": list(argv or sys.argv[1:])}) as tracer:
            status = args.handler(args)
            tracer.metadata["exit_status"] = status
        return status
    except (WqoError, ValidationError, argparse.ArgumentTypeError, OSError, RuntimeError) as e:
        logger.debug(f"Command {args.command} failed: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR
    finally:
        flush_langfuse()
