from typing import TYPE_CHECKING

from hyperwiener.core.utils.transformers import non_negative_int, positive_int
from hyperwiener.packages.bounds.commands import bound_command, identities_command

if TYPE_CHECKING:
    import argparse


def setup(subparsers: "argparse._SubParsersAction"):
    parser = subparsers.add_parser("bound", help="Closed-form maximum Wiener index wmax(n, k)")
    parser.add_argument("--n", type=positive_int, required=True, help="Order")
    parser.add_argument("--k", type=positive_int, required=True, help="Uniformity")
    parser.set_defaults(handler=bound_command, parser=parser)

    parser = subparsers.add_parser("identities", help="Check the induction-step identities")
    parser.add_argument("--s-max", type=non_negative_int, help="Largest s of the grid")
    parser.add_argument("--k-max", type=positive_int, help="Largest k of the grid")
    parser.set_defaults(handler=identities_command, parser=parser)
