"""Annotation exporter for the gistscore scoring engine.

Turns directories of raw .txt documents into the engine's annotated
record format (POS, lemmas, sentence boundaries, per-paragraph
coreference chain counts) plus sentence/token embedding sidecars and a
provenance manifest, so every index variant — not just the raw-text
subset — becomes computable on the exported corpus.
"""

__version__ = "0.1.0"

from .errors import ExportError, ModelUnavailable
from .backend import AnnotationBackend, DeterministicBackend, TaggedToken
from .export import (ExportProfile, ExportResult, MANIFEST_FORMAT,
                     export_corpus, resolve_backend)

__all__ = [
    "ExportError", "ModelUnavailable",
    "AnnotationBackend", "DeterministicBackend", "TaggedToken",
    "ExportProfile", "ExportResult", "MANIFEST_FORMAT",
    "export_corpus", "resolve_backend",
    "__version__",
]
