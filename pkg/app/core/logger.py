import logging
import sys

LOG_FORMAT = "[%(levelname)s] %(message)s"


def configure_logging(level: str = "WARNING") -> None:
    """Route all service loggers to stderr; stdout is reserved for reports."""
    root = logging.getLogger("app")
    root.handlers.clear()
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    root.addHandler(handler)
    root.setLevel(level.upper())
    root.propagate = False
