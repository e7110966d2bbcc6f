"""Exporter exception hierarchy.

ExportError is the base for everything raised by this package.
Corpus-reading problems propagate unchanged from gistscore (CorpusError
and friends) so callers can distinguish "input unreadable" from
"annotation failed".
"""


class ExportError(Exception):
    """Base class for annotation-export failures."""


class ModelUnavailable(ExportError):
    """A profile names a model id that cannot be loaded in this installation."""
