"""Exception hierarchy for the gistscore engine.

Exceptions are grouped by the layer that raises them; the CLI maps each
group onto a process exit code (config 2, resource 3, corpus 4, labels 5).
"""


class GistScoreError(Exception):
    """Base class for every error raised by this package."""


# --- corpus layer -----------------------------------------------------------

class CorpusError(GistScoreError):
    """Problems with corpus content or structure."""


class EmptyDocument(CorpusError):
    """Raw text contained no non-whitespace content."""


class SchemaError(CorpusError):
    """An annotated-corpus record violates the documented schema.

    Carries the record location (file, line/record index, field path).
    """

    def __init__(self, message: str, location: str = ""):
        self.location = location
        super().__init__(f"{location}: {message}" if location else message)


class DanglingEmbeddingRef(CorpusError):
    """An embedding_ref / vector_ref has no entry in the sidecar store."""


# --- resource layer ---------------------------------------------------------

class ResourceError(GistScoreError):
    """Problems loading or querying an external linguistic resource."""


class DimMismatch(ResourceError):
    """A vector row's length disagrees with the declared dimensionality."""


class DuplicateKey(ResourceError):
    """A vector file defines the same key twice."""


class ParseError(ResourceError):
    """A resource file is malformed; message names file and line."""

    def __init__(self, message: str, path: str = "", line: int | None = None):
        self.path = path
        self.line = line
        where = f"{path}:{line}" if line is not None else path
        super().__init__(f"{where}: {message}" if where else message)


class CycleError(ResourceError):
    """The hypernym graph contains a cycle; names an involved synset."""

    def __init__(self, synset_id: str):
        self.synset_id = synset_id
        super().__init__(f"hypernym cycle through synset {synset_id}")


class UnknownSynset(ResourceError):
    """A synset id was queried that the database does not contain."""


class PatternCompileError(ResourceError):
    """A connective pattern does not compile; message names the line."""

    def __init__(self, message: str, path: str = "", line: int | None = None):
        self.path = path
        self.line = line
        where = f"{path}:{line}" if line is not None else path
        super().__init__(f"{where}: {message}" if where else message)


# --- aggregation / index layer ----------------------------------------------

class NoPairs(GistScoreError):
    """The variant scheme produced no unit pairs for this document."""


class MissingResource(GistScoreError):
    """An index could not be computed because required inputs are absent
    (no loaded resource, no resolvable embeddings, no matched tokens...)."""


# --- scoring layer ----------------------------------------------------------

class TooFewDocuments(GistScoreError):
    """A z-score batch needs at least two finite values."""


class MissingVariant(GistScoreError):
    """A document lacks the variant selected by the scoring config."""

    def __init__(self, doc_id: str, family: str, variant: str):
        self.doc_id = doc_id
        self.family = family
        self.variant = variant
        super().__init__(f"document {doc_id!r} has no value for {variant} (family {family})")


# --- evaluation layer -------------------------------------------------------

class MissingLabel(GistScoreError):
    """A requested group label is absent from the scored documents."""


class GroupTooSmall(GistScoreError):
    """A comparison group has fewer than two documents."""


# --- CLI layer ---------------------------------------------------------------

class ConfigError(GistScoreError):
    """The run configuration file or flags are invalid."""
