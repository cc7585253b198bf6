import argparse

from fatpoints.cli.commands import dimension, lattice, minus_one, oracle, std

COMMAND_MODULES = (std, dimension, minus_one, oracle, lattice)


def register_commands(subparsers: argparse._SubParsersAction) -> None:
    for module in COMMAND_MODULES:
        module.register(subparsers)
