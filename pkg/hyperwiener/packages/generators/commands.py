import logging
from typing import TYPE_CHECKING

from hyperwiener.core.families import FAMILIES
from hyperwiener.core.hypergraph import serialize
from hyperwiener.core.utils.files import write_result

if TYPE_CHECKING:
    from hyperwiener.__main__ import CLIFlags

log = logging.getLogger("hyperwiener.packages.generators")


def gen_command(flags: "CLIFlags") -> int:
    """
    Write a member of a named family in the hypergraph file format.
    """
    if flags.family != "fano" and (flags.n is None or flags.k is None):
        flags.parser.error(f"{flags.family} needs both --n and --k")
    h = FAMILIES[flags.family](flags.n, flags.k, flags.x)
    log.info(f"Generated {flags.family} with n={h.n} k={h.k} and {len(h.edges)} edges.")
    write_result(serialize(h), flags.output)
    return 0
