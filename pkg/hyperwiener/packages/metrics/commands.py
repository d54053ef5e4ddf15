import logging
from typing import TYPE_CHECKING

from hyperwiener.core.hypergraph import distance, parse, wiener
from hyperwiener.core.utils.files import read_source, write_result

if TYPE_CHECKING:
    from hyperwiener.__main__ import CLIFlags

log = logging.getLogger("hyperwiener.packages.metrics")


def wiener_command(flags: "CLIFlags") -> int:
    """
    Print the Wiener index of the hypergraph in ``flags.file``.
    """
    h = parse(read_source(flags.file))
    log.info(f"Read hypergraph with n={h.n} k={h.k} and {len(h.edges)} edges.")
    write_result(f"{wiener(h)}\n")
    return 0


def dist_command(flags: "CLIFlags") -> int:
    """
    Print the Berge distance between two vertices, or ``unreachable``.
    """
    h = parse(read_source(flags.file))
    write_result(str(distance(h, flags.u, flags.v)) + "\n")
    return 0
