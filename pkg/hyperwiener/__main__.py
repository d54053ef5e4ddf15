import argparse
import importlib
import logging
import logging.handlers
import sys
from pathlib import Path
from typing import Callable

from rich.console import Console
from rich.markup import escape

from hyperwiener import __version__ as hyperwiener_version
from hyperwiener.core.errors import HypergraphError
from hyperwiener.logging import init_logger, stop_logger
from hyperwiener.settings import read_settings, update_settings, write_default_settings

log = logging.getLogger("hyperwiener")
console = Console(stderr=True, highlight=False)

PACKAGES = ["metrics", "generators", "bounds", "verification"]


class CLIFlags(argparse.Namespace):
    version: bool
    config_file: Path | None
    reset_settings: Path | None
    disable_rich: bool
    debug: bool
    verbose: bool
    command: str | None
    handler: Callable[["CLIFlags"], int]
    parser: argparse.ArgumentParser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperwiener",
        description="Wiener index of k-uniform hypergraphs: compute, generate, bound, verify",
    )
    parser.add_argument("--version", "-V", action="store_true", help="Display the version")
    parser.add_argument("--config-file", type=Path, help="Load settings from this YAML file")
    parser.add_argument(
        "--reset-settings",
        type=Path,
        metavar="PATH",
        help="Write the default configuration to PATH and exit",
    )
    parser.add_argument("--disable-rich", action="store_true", help="Disable rich log format")
    parser.add_argument("--debug", action="store_true", help="Enable debug logs")
    parser.add_argument("--verbose", "-v", action="store_true", help="Enable info logs")

    subparsers = parser.add_subparsers(dest="command", metavar="command")
    for package in PACKAGES:
        module = importlib.import_module(f"hyperwiener.packages.{package}")
        module.setup(subparsers)
    return parser


def parse_cli_flags(arguments: list[str]) -> CLIFlags:
    parser = build_parser()
    args = parser.parse_args(arguments, namespace=CLIFlags())
    if not (args.version or args.reset_settings or args.command):
        parser.error("a command is required")
    return args


def reset_settings(path: Path):
    write_default_settings(path)
    console.print(f"[green]A new settings file has been written at [blue]{path}[/blue].[/green]")


def load_settings(path: Path, parser: argparse.ArgumentParser):
    if not path.is_file():
        parser.error(f"config file {path} does not exist")
    read_settings(path)
    update_settings(path)


def run(argv: list[str]) -> int:
    """
    Parse ``argv``, dispatch to one subcommand and return the process exit code: 0 on
    success, 1 on domain errors or failed verification, 2 on usage errors.
    """
    try:
        cli_flags = parse_cli_flags(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2

    if cli_flags.version:
        sys.stdout.write(f"hyperwiener {hyperwiener_version}\n")
        return 0
    if cli_flags.reset_settings:
        reset_settings(cli_flags.reset_settings)
        return 0

    queue_listener: logging.handlers.QueueListener | None = None
    try:
        if cli_flags.config_file is not None:
            load_settings(cli_flags.config_file, cli_flags.parser)
        queue_listener = init_logger(cli_flags.disable_rich, cli_flags.debug, cli_flags.verbose)
        log.debug(f"Running {cli_flags.command} with {vars(cli_flags)}")
        return cli_flags.handler(cli_flags)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    except HypergraphError as exc:
        console.print(f"[red]error:[/red] {escape(exc.message)}", soft_wrap=True)
        return 1
    except OSError as exc:
        console.print(f"[red]error:[/red] {escape(str(exc))}", soft_wrap=True)
        return 1
    except Exception:
        log.critical("Unhandled exception.", exc_info=True)
        return 1
    finally:
        if queue_listener:
            stop_logger(queue_listener)


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
