import sys
from pathlib import Path


def read_source(source: str) -> str:
    """
    Read a whole text file, ``-`` being standard input.
    """
    if source == "-":
        return sys.stdin.read()
    return Path(source).read_text()


def write_result(text: str, path: Path | None = None):
    """
    Write command output to ``path``, or to stdout when no path is given.
    """
    if path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        path.write_text(text)
