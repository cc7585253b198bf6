import argparse

from fatpoints.cli import deps
from fatpoints.core.reduction import pre_standard_form, standardize
from fatpoints.schemas.output import CommandOutput


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("std", help="pre-standard form by sorting and Cremona moves")
    deps.add_n_argument(parser)
    deps.add_class_argument(parser)
    deps.add_json_flag(parser)
    parser.set_defaults(handler=run_std)

    parser = subparsers.add_parser(
        "standardize", help="standard form, clamping negative multiplicities"
    )
    deps.add_n_argument(parser)
    deps.add_class_argument(parser)
    deps.add_json_flag(parser)
    parser.set_defaults(handler=run_standardize)


def run_std(args: argparse.Namespace) -> int:
    d = deps.resolve_class(args)
    report = pre_standard_form(d)
    output = CommandOutput.for_class(report.result, word=report.word, status=report.status.value)
    deps.emit(args, str(report.result), output)
    return 0


def run_standardize(args: argparse.Namespace) -> int:
    d = deps.resolve_class(args)
    report = standardize(d)
    output = CommandOutput.for_class(
        report.result,
        word=report.word,
        status=report.status.value,
        clamp_total=list(report.clamp_total),
    )
    deps.emit(args, str(report.result), output)
    return 0
