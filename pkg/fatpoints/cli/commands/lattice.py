import argparse

from fatpoints.cli import deps
from fatpoints.core.lattice import k_dot, k_self, root_lattice_type, self_intersection
from fatpoints.schemas.expression import format_flat, format_notation
from fatpoints.schemas.output import CommandOutput


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("type", help="root system of the Weyl group for (n, r)")
    parser.add_argument("--n", type=int, required=True, help="dimension of the projective space")
    parser.add_argument("--r", type=int, required=True, help="number of points")
    parser.set_defaults(handler=run_type)

    parser = subparsers.add_parser("notation", help="rewrite a class in Ln(d;m^a) or flat form")
    deps.add_n_argument(parser)
    deps.add_class_argument(parser)
    parser.add_argument("--flat", action="store_true", help="print d m1 m2 ... instead")
    deps.add_json_flag(parser)
    parser.set_defaults(handler=run_notation)


def run_type(args: argparse.Namespace) -> int:
    print(f"{root_lattice_type(args.n, args.r)} K^2={k_self(args.n, args.r)}")
    return 0


def run_notation(args: argparse.Namespace) -> int:
    d = deps.resolve_class(args)
    plain = format_flat(d) if args.flat else format_notation(d)
    output = CommandOutput.for_class(
        d,
        extra={
            "notation": format_notation(d),
            "self_intersection": self_intersection(d),
            "k_dot": k_dot(d),
        },
    )
    deps.emit(args, plain, output)
    return 0
