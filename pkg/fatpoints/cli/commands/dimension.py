import argparse

from fatpoints.cli import deps
from fatpoints.core.dimension import chi, dim2, dim3, expected_dim, quad
from fatpoints.schemas.output import CommandOutput
from fatpoints.schemas.reports import DimensionResult, ReductionStatus


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("dim2", help="h0 of a plane class")
    deps.add_n_argument(parser, fallback=2)
    deps.add_class_argument(parser)
    deps.add_json_flag(parser)
    parser.set_defaults(handler=run_dim2)

    parser = subparsers.add_parser("dim3", help="h0 of a class in P^3")
    deps.add_n_argument(parser, fallback=3)
    deps.add_class_argument(parser)
    deps.add_json_flag(parser)
    parser.set_defaults(handler=run_dim3)

    parser = subparsers.add_parser("quad", help="peel the quadric through 9 points in P^3")
    deps.add_n_argument(parser, fallback=3)
    deps.add_class_argument(parser)
    deps.add_json_flag(parser)
    parser.set_defaults(handler=run_quad)

    parser = subparsers.add_parser("chi", help="virtual dimension of a class")
    deps.add_n_argument(parser, fallback=2)
    deps.add_class_argument(parser)
    deps.add_json_flag(parser)
    parser.set_defaults(handler=run_chi)


def _emit_dimension(args: argparse.Namespace, d, result: DimensionResult) -> int:
    output = CommandOutput.for_class(
        d,
        h0=result.h0,
        chi=result.chi,
        expected=result.expected,
        basis=result.basis.value,
        status=result.status.value,
        extra={"reduced": [result.reduced.degree, *result.reduced.mults]},
    )
    deps.emit(args, str(result.h0), output)
    return 0


def run_dim2(args: argparse.Namespace) -> int:
    d = deps.resolve_class(args, fallback=2)
    return _emit_dimension(args, d, dim2(d))


def run_dim3(args: argparse.Namespace) -> int:
    d = deps.resolve_class(args, fallback=3)
    return _emit_dimension(args, d, dim3(d))


def run_quad(args: argparse.Namespace) -> int:
    d = deps.resolve_class(args, fallback=3)
    report = quad(d)
    output = CommandOutput.for_class(
        report.result, status=report.status.value, peeled=report.peeled
    )
    if report.status is ReductionStatus.NOT_EFFECTIVE:
        plain = ReductionStatus.NOT_EFFECTIVE.value
    else:
        plain = str(report.result)
    deps.emit(args, plain, output)
    return 0


def run_chi(args: argparse.Namespace) -> int:
    d = deps.resolve_class(args, fallback=2)
    value = chi(d)
    output = CommandOutput.for_class(d, chi=value, expected=expected_dim(d))
    deps.emit(args, str(value), output)
    return 0
