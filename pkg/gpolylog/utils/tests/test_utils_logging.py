"""Testing for the command-line logging set-up."""
# License: GNU AGPLv3

import io
import logging

import pytest

from gpolylog.utils._logging import configure_logging


@pytest.mark.parametrize("verbosity, level",
                         [(0, logging.WARNING), (1, logging.INFO),
                          (2, logging.DEBUG), (5, logging.DEBUG)])
def test_configure_logging_levels(verbosity, level):
    logger = configure_logging(verbosity, stream=io.StringIO())
    assert logger.level == level


def test_configure_logging_replaces_handler():
    stream = io.StringIO()
    configure_logging(1, stream=io.StringIO())
    logger = configure_logging(1, stream=stream)
    handlers = [h for h in logger.handlers
                if getattr(h, "_gpolylog_cli", False)]
    assert len(handlers) == 1

    logging.getLogger("gpolylog.fitlab").info("peeled k=%d", 3)
    assert "[INFO] peeled k=3" in stream.getvalue()
