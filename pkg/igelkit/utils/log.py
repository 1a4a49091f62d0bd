import logging
import sys

ROOT = "igelkit"
_FORMAT = "%(levelname)s %(name)s: %(message)s"


def configure_logging(level="WARNING", stream=None):
    """Routes the ``igelkit`` logger tree to stderr. Safe to call repeatedly;
    the handler is installed once and only the level changes."""
    logger = logging.getLogger(ROOT)
    if isinstance(level, str):
        level = logging.getLevelName(level.upper())
        if not isinstance(level, int):
            level = logging.WARNING
    logger.setLevel(level)
    handler = next((h for h in logger.handlers if getattr(h, "_igelkit", False)), None)
    if handler is None:
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter(_FORMAT))
        handler._igelkit = True
        logger.addHandler(handler)
        logger.propagate = False
    # re-resolve stderr so a replaced sys.stderr is honoured
    handler.stream = stream or sys.stderr
    return logger


def level_for_verbosity(verbose, default="WARNING"):
    if verbose >= 2:
        return "DEBUG"
    if verbose == 1:
        return "INFO"
    return default
