import logging
from typing import TYPE_CHECKING

from rich.console import Console
from rich.progress import BarColumn, MofNCompleteColumn, Progress, TextColumn

from hyperwiener.core.enumeration import verify_theorem
from hyperwiener.core.utils.files import write_result
from hyperwiener.core.utils.formatting import plural
from hyperwiener.settings import settings

if TYPE_CHECKING:
    from hyperwiener.__main__ import CLIFlags

log = logging.getLogger("hyperwiener.packages.verification")


def verify_command(flags: "CLIFlags") -> int:
    """
    Run the exhaustive verification and print its report. Exit code 0 iff the maximum and its
    maximizers match the extremal paths and no check was violated.
    """
    jobs = settings.jobs if flags.jobs is None else flags.jobs
    if not flags.progress:
        report = verify_theorem(flags.n, flags.k, flags.max_edges, jobs)
    else:
        columns = (TextColumn("{task.description}"), BarColumn(), MofNCompleteColumn())
        with Progress(*columns, console=Console(stderr=True), transient=True) as progress:
            task = progress.add_task(f"n={flags.n} k={flags.k}", total=None)

            def advance(done: int, total: int):
                progress.update(task, completed=done, total=total)

            report = verify_theorem(flags.n, flags.k, flags.max_edges, jobs, advance)

    write_result(report.to_text())
    if not report.ok:
        violations = (
            len(report.claim_violations)
            + len(report.lemma_violations)
            + len(report.reduction_violations)
        )
        log.warning(
            f"Verification failed at n={flags.n} k={flags.k}: "
            f"theorem_match={report.theorem_match}, {plural(violations, 'violation')}."
        )
        return 1
    return 0
