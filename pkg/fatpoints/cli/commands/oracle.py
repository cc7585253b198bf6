import argparse

from fatpoints.cli import deps
from fatpoints.core.config import settings
from fatpoints.core.harness import run_sweep
from fatpoints.core.oracle import h0_interpolation, verify_class
from fatpoints.schemas.oracle import InterpolationProblem
from fatpoints.schemas.output import CommandOutput


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("oracle", help="h0 by interpolation at random points mod p")
    deps.add_n_argument(parser)
    deps.add_class_argument(parser)
    deps.add_oracle_arguments(parser)
    deps.add_json_flag(parser)
    parser.set_defaults(handler=run_oracle)

    parser = subparsers.add_parser("verify", help="compare dim2/dim3 with the oracle")
    deps.add_n_argument(parser)
    deps.add_class_argument(parser)
    deps.add_oracle_arguments(parser)
    deps.add_json_flag(parser)
    parser.set_defaults(handler=run_verify)

    parser = subparsers.add_parser("sweep", help="verify every small class in a box")
    parser.add_argument("--n", type=int, required=True, choices=(2, 3))
    parser.add_argument("--dmax", type=int, required=True, help="largest degree")
    parser.add_argument("--rmax", type=int, required=True, help="largest number of points")
    parser.add_argument("--mmax", type=int, required=True, help="largest multiplicity")
    parser.add_argument(
        "--strict", action="store_true", help="fail on conjectural disagreements too"
    )
    deps.add_oracle_arguments(parser)
    deps.add_json_flag(parser)
    parser.set_defaults(handler=run_sweep_command)


def run_oracle(args: argparse.Namespace) -> int:
    d = deps.resolve_class(args)
    problem = InterpolationProblem.from_class(
        d,
        prime=settings.ORACLE_PRIME if args.p is None else args.p,
        seed=settings.ORACLE_SEED if args.seed is None else args.seed,
        trials=settings.ORACLE_TRIALS if args.trials is None else args.trials,
    )
    value = h0_interpolation(problem)
    output = CommandOutput.for_class(d, oracle_h0=value)
    deps.emit(args, str(value), output)
    return 0


def run_verify(args: argparse.Namespace) -> int:
    d = deps.resolve_class(args)
    report = verify_class(d, prime=args.p, seed=args.seed, trials=args.trials)
    output = CommandOutput.for_class(
        d,
        oracle_h0=report.oracle_h0,
        algorithm_h0=report.algorithm_h0,
        basis=report.basis.value,
        agree=report.agree,
    )
    plain = f"{'agree' if report.agree else 'DISAGREE'} {report.algorithm_h0} {report.oracle_h0}"
    deps.emit(args, plain, output)
    return 0 if report.agree else 1


def run_sweep_command(args: argparse.Namespace) -> int:
    report = run_sweep(
        args.n,
        args.dmax,
        args.rmax,
        args.mmax,
        prime=args.p,
        seed=args.seed,
        trials=args.trials,
    )
    if args.json:
        print(report.model_dump_json())
    else:
        print(
            f"checked {report.checked}, agreed {report.agreed}, "
            f"non-effective sound {report.not_effective_sound}/{report.not_effective}"
        )
        for v in report.disagreements:
            print(f"DISAGREE {v.divisor} algorithm {v.algorithm_h0} oracle {v.oracle_h0} "
                  f"[{v.basis.value}]")
    failing = report.disagreements if args.strict else report.binding_disagreements
    return 1 if failing else 0
