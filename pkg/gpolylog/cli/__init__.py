"""The module :mod:`gpolylog.cli` implements the ``gpolylog`` command-line
interface."""

from ._main import main, build_parser
from ._output import RunManifest, render, digest

__all__ = [
    "main",
    "build_parser",
    "RunManifest",
    "render",
    "digest"
    ]
