import argparse

from fatpoints.cli import deps
from fatpoints.core.config import settings
from fatpoints.core.minus_one import (
    enumerate_minus_one,
    is_minus_one_class,
    iter_canonical_minus_one,
    special_witness,
)
from fatpoints.schemas.output import CommandOutput


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("minus-one", help="decide whether a class is a (-1)-class")
    deps.add_n_argument(parser)
    deps.add_class_argument(parser)
    deps.add_json_flag(parser)
    parser.add_argument("--chain", action="store_true", help="also print the descent chain")
    parser.set_defaults(handler=run_minus_one)

    parser = subparsers.add_parser("enumerate", help="list (-1)-classes up to a degree bound")
    parser.add_argument("--n", type=int, required=True, help="dimension of the projective space")
    parser.add_argument("--r", type=int, required=True, help="number of points")
    parser.add_argument("--dmax", type=int, required=True, help="largest degree listed")
    parser.add_argument(
        "--canonical", action="store_true", help="one sorted representative per orbit of S_r"
    )
    deps.add_json_flag(parser)
    parser.set_defaults(handler=run_enumerate)

    parser = subparsers.add_parser(
        "witness", help="a (-1)-curve E with D.E <= -2 for a plane class"
    )
    deps.add_n_argument(parser, fallback=2)
    deps.add_class_argument(parser)
    parser.add_argument(
        "--dmax",
        type=int,
        default=None,
        help=f"degree bound of the search (default {settings.WITNESS_MAX_DEGREE})",
    )
    deps.add_json_flag(parser)
    parser.set_defaults(handler=run_witness)


def run_minus_one(args: argparse.Namespace) -> int:
    e = deps.resolve_class(args)
    certificate = is_minus_one_class(e)
    reason = certificate.failure_reason.value if certificate.failure_reason else None
    output = CommandOutput.for_class(
        e,
        verdict=certificate.verdict,
        failure_reason=reason,
        chain=[[c.degree, *c.mults] for c in certificate.chain],
        word=certificate.word,
    )
    lines = ["true" if certificate.verdict else "false"]
    if args.chain:
        lines.extend(str(c) for c in certificate.chain)
    deps.emit(args, "\n".join(lines), output)
    return 0


def run_enumerate(args: argparse.Namespace) -> int:
    if args.canonical:
        classes = list(iter_canonical_minus_one(args.n, args.r, args.dmax))
    else:
        classes = sorted(
            enumerate_minus_one(args.n, args.r, args.dmax),
            key=lambda c: (c.degree, tuple(-m for m in c.mults)),
        )
    for e in classes:
        print(CommandOutput.for_class(e).render() if args.json else str(e))
    return 0


def run_witness(args: argparse.Namespace) -> int:
    d = deps.resolve_class(args, fallback=2)
    found = special_witness(d, args.dmax)
    if found is None:
        output = CommandOutput.for_class(d, verdict=False)
        deps.emit(args, "none", output)
        return 0
    e, product = found
    output = CommandOutput.for_class(
        d, verdict=True, extra={"witness": [e.degree, *e.mults], "product": product}
    )
    deps.emit(args, f"{e} {product}", output)
    return 0
