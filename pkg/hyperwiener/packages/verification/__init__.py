from typing import TYPE_CHECKING

from hyperwiener.core.utils.transformers import non_negative_int, positive_int
from hyperwiener.packages.verification.commands import verify_command

if TYPE_CHECKING:
    import argparse


def setup(subparsers: "argparse._SubParsersAction"):
    parser = subparsers.add_parser(
        "verify", help="Exhaustively check the maximum Wiener index at fixed n and k"
    )
    parser.add_argument("--n", type=positive_int, required=True, help="Order")
    parser.add_argument("--k", type=positive_int, required=True, help="Uniformity")
    parser.add_argument(
        "--max-edges",
        type=non_negative_int,
        help="Only scan edge sets of at most this many edges",
    )
    parser.add_argument(
        "--jobs", type=positive_int, help="Worker processes, defaults to the configured value"
    )
    parser.add_argument(
        "--progress", action="store_true", help="Show a progress bar on stderr"
    )
    parser.set_defaults(handler=verify_command, parser=parser)
