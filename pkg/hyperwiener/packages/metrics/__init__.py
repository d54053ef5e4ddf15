from typing import TYPE_CHECKING

from hyperwiener.core.utils.transformers import vertex_label
from hyperwiener.packages.metrics.commands import dist_command, wiener_command

if TYPE_CHECKING:
    import argparse


def setup(subparsers: "argparse._SubParsersAction"):
    parser = subparsers.add_parser("wiener", help="Wiener index of a hypergraph file")
    parser.add_argument("file", help="Hypergraph file, - for standard input")
    parser.set_defaults(handler=wiener_command, parser=parser)

    parser = subparsers.add_parser("dist", help="Berge distance between two vertices")
    parser.add_argument("file", help="Hypergraph file, - for standard input")
    parser.add_argument("u", type=vertex_label)
    parser.add_argument("v", type=vertex_label)
    parser.set_defaults(handler=dist_command, parser=parser)
