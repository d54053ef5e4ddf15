import logging
import logging.handlers
from queue import Queue

from rich.console import Console
from rich.logging import RichHandler

from hyperwiener.settings import settings

log = logging.getLogger("hyperwiener")

_queue_handler: logging.handlers.QueueHandler | None = None


def init_logger(
    disable_rich: bool = False, debug: bool = False, verbose: bool = False
) -> logging.handlers.QueueListener:
    global _queue_handler

    formatter = logging.Formatter(
        "[{asctime}] {levelname} {name}: {message}", datefmt="%Y-%m-%d %H:%M:%S", style="{"
    )
    if debug:
        level = logging.DEBUG
    elif verbose:
        level = logging.INFO
    else:
        level = logging.WARNING

    # handlers, stdout is reserved for command results
    stream_handler: logging.Handler
    if disable_rich:
        stream_handler = logging.StreamHandler()
        stream_handler.setFormatter(formatter)
    else:
        stream_handler = RichHandler(console=Console(stderr=True), show_path=False)
    stream_handler.setLevel(level)
    handlers: list[logging.Handler] = [stream_handler]

    # file handler
    if settings.log_file:
        file_handler = logging.handlers.RotatingFileHandler(
            settings.log_file, maxBytes=8**7, backupCount=8
        )
        file_handler.setLevel(logging.INFO)
        file_handler.setFormatter(formatter)
        handlers.append(file_handler)

    queue = Queue(-1)
    _queue_handler = logging.handlers.QueueHandler(queue)

    root = logging.getLogger()
    root.addHandler(_queue_handler)
    root.setLevel(logging.INFO)
    log.setLevel(logging.DEBUG if debug else logging.INFO)

    queue_listener = logging.handlers.QueueListener(queue, *handlers, respect_handler_level=True)
    queue_listener.start()

    return queue_listener


def stop_logger(queue_listener: logging.handlers.QueueListener):
    global _queue_handler

    queue_listener.stop()
    if _queue_handler is not None:
        logging.getLogger().removeHandler(_queue_handler)
        _queue_handler = None
