"""Module for setting up logging."""
import logging
import sys
from typing import Optional
from typing import Union

LOG_LEVEL_MAP = {0: "INFO", 1: "DEBUG"}

LOG_LEVELS = {
    "DEBUG": logging.DEBUG,
    "INFO": logging.INFO,
    "WARNING": logging.WARNING,
    "ERROR": logging.ERROR,
    "CRITICAL": logging.CRITICAL,
}

LOG_FORMATS = {
    "DEBUG": "%(asctime)s %(levelname)s %(name)s: %(message)s",
    "INFO": "%(levelname)s: %(message)s",
    "WARNING": "%(levelname)s: %(message)s",
    "ERROR": "%(levelname)s: %(message)s",
    "CRITICAL": "%(levelname)s: %(message)s",
}


def configure_logger(
    stream_level: Union[int, str] = "INFO", debug_file: Optional[str] = None
) -> logging.Logger:
    """Configure the ``dalpha`` logger.

    ``stream_level`` is either a level name or a ``-v`` count; counts above
    one are treated as DEBUG. With ``debug_file`` every record is also
    written there at DEBUG.
    """
    if isinstance(stream_level, int):
        stream_level = LOG_LEVEL_MAP[min(stream_level, 1)]
    logger = logging.getLogger("dalpha")
    logger.setLevel(logging.DEBUG)
    # Reconfiguring replaces handlers instead of stacking them.
    del logger.handlers[:]

    if debug_file is not None:
        file_handler = logging.FileHandler(debug_file)
        file_handler.setLevel(logging.DEBUG)
        file_handler.setFormatter(logging.Formatter(LOG_FORMATS["DEBUG"]))
        logger.addHandler(file_handler)

    # Results go to stdout via click; diagnostics go to stderr.
    stream_handler = logging.StreamHandler(stream=sys.stderr)
    stream_handler.setLevel(LOG_LEVELS[stream_level])
    stream_handler.setFormatter(logging.Formatter(LOG_FORMATS[stream_level]))
    logger.addHandler(stream_handler)

    return logger
