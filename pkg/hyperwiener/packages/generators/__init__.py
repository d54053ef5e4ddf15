from pathlib import Path
from typing import TYPE_CHECKING

from hyperwiener.core.families import FAMILIES
from hyperwiener.core.utils.transformers import positive_int
from hyperwiener.packages.generators.commands import gen_command

if TYPE_CHECKING:
    import argparse


def setup(subparsers: "argparse._SubParsersAction"):
    parser = subparsers.add_parser("gen", help="Generate a hypergraph of a named family")
    parser.add_argument("family", choices=list(FAMILIES))
    parser.add_argument("--n", type=positive_int, help="Order")
    parser.add_argument("--k", type=positive_int, help="Uniformity")
    parser.add_argument(
        "--x", type=int, default=1, help="Offset of the shifted edges when k divides n"
    )
    parser.add_argument("-o", "--output", type=Path, help="Write to this file instead of stdout")
    parser.set_defaults(handler=gen_command, parser=parser)
