"""Logging set-up for command-line runs."""
# License: GNU AGPLv3

import logging

_FORMAT = "%(asctime)s - [%(levelname)s] %(message)s"


def configure_logging(verbosity=0, stream=None):
    """Attach a stream handler to the ``gpolylog`` logger.

    The library itself never installs handlers; only entry points call this.

    Parameters
    ----------
    verbosity : int, optional, default: ``0``
        ``0`` logs warnings, ``1`` info messages and ``2`` or more debug
        messages.

    stream : file-like or None, optional, default: ``None``
        Destination, standard error when ``None``.

    Returns
    -------
    logger : :class:`logging.Logger`
        The configured package logger.

    """
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbosity,
                                                     logging.DEBUG)
    logger = logging.getLogger("gpolylog")
    for handler in list(logger.handlers):
        if getattr(handler, "_gpolylog_cli", False):
            logger.removeHandler(handler)
    handler = logging.StreamHandler(stream)
    handler.setFormatter(logging.Formatter(_FORMAT))
    handler._gpolylog_cli = True
    logger.addHandler(handler)
    logger.setLevel(level)
    return logger
