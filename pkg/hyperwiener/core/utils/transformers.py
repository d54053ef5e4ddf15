"""
argparse ``type=`` converters shared by the subcommand packages. They raise
``argparse.ArgumentTypeError`` so bad values become usage errors (exit code 2).
"""

import argparse

__all__ = ("positive_int", "non_negative_int", "vertex_label")


def positive_int(value: str) -> int:
    number = _integer(value)
    if number < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value!r}")
    return number


def non_negative_int(value: str) -> int:
    number = _integer(value)
    if number < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value!r}")
    return number


def vertex_label(value: str) -> int:
    # range against n is checked once the file is read
    return _integer(value)


def _integer(value: str) -> int:
    try:
        return int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {value!r}") from None
