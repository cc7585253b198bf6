import argparse
from typing import Optional

from fatpoints.schemas.divisor import DivisorClass
from fatpoints.schemas.expression import ClassExpression
from fatpoints.schemas.output import CommandOutput

CLASS_HELP = 'class as "d m1 m2 ..." or "Ln(d;m1^a1,m2^a2,...)"'


def add_class_argument(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("expression", nargs="+", metavar="CLASS", help=CLASS_HELP)


def add_n_argument(parser: argparse.ArgumentParser, fallback: Optional[int] = None) -> None:
    help_text = "dimension of the projective space"
    if fallback is not None:
        help_text += f" (default {fallback} unless the class is written Ln(...))"
    parser.add_argument("--n", type=int, default=None, help=help_text)


def add_json_flag(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--json", action="store_true", help="print a JSON document")


def add_oracle_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--p", type=int, default=None, help="prime modulus (default 2^31 - 1)")
    parser.add_argument("--seed", type=int, default=None, help="seed for the sampled points")
    parser.add_argument("--trials", type=int, default=None, help="number of independent trials")


def resolve_class(args: argparse.Namespace, fallback: Optional[int] = None) -> DivisorClass:
    """
    ``--n`` wins, then the Ln prefix of the expression, then the command's
    fallback dimension.
    """
    expression = ClassExpression.parse(args.expression)
    n = args.n
    if n is None and expression.ambient_dim is None:
        n = fallback
    return expression.to_class(n)


def emit(args: argparse.Namespace, plain: str, output: CommandOutput) -> None:
    print(output.render() if args.json else plain)
