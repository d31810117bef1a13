import logging
import sys

LOG_FORMAT = "%(levelname)-5.5s [%(name)s] %(message)s"


def configure_logging(verbose: bool = False) -> None:
    """Route run metadata to stderr; stdout stays reserved for data payloads"""
    root = logging.getLogger()
    for handler in list(root.handlers):
        if getattr(handler, "_magma_handler", False):
            root.removeHandler(handler)

    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    handler._magma_handler = True
    root.addHandler(handler)
    root.setLevel(logging.DEBUG if verbose else logging.INFO)
    logging.getLogger("sqlalchemy.engine").setLevel(logging.WARNING)
