import logging
from typing import TYPE_CHECKING

from hyperwiener.core.formulas import check_identities, wmax
from hyperwiener.core.utils.files import write_result
from hyperwiener.settings import settings

if TYPE_CHECKING:
    from hyperwiener.__main__ import CLIFlags

log = logging.getLogger("hyperwiener.packages.bounds")


def bound_command(flags: "CLIFlags") -> int:
    """
    Print wmax(n, k), the largest Wiener index of a connected k-uniform hypergraph of order n.
    """
    write_result(f"{wmax(flags.n, flags.k)}\n")
    return 0


def identities_command(flags: "CLIFlags") -> int:
    """
    Check both closing identities on the whole grid. Prints ``OK <count>`` or the first
    failing tuple, in which case the exit code is 1.
    """
    s_max = settings.identities_s_max if flags.s_max is None else flags.s_max
    k_max = settings.identities_k_max if flags.k_max is None else flags.k_max
    sweep = check_identities(s_max, k_max)
    if sweep.failure is None:
        write_result(f"OK {sweep.count}\n")
        return 0
    s, k, r, ell, case, residual, expected = sweep.failure
    write_result(
        f"FAIL case={case} s={s} k={k} r={r} ell={ell} residual={residual} expected={expected}\n"
    )
    return 1
