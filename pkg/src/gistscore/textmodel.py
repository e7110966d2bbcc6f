"""Document hierarchy: Token -> Sentence -> Paragraph -> Document -> Corpus.

All types are immutable after construction and safe to share across
threads. Invariants are enforced in __post_init__ so a constructed object
is always well-formed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

COARSE_POS = ("NOUN", "VERB", "ADJ", "ADV", "OTHER")
CONTENT_POS = ("NOUN", "VERB", "ADJ", "ADV")


@dataclass(frozen=True)
class Token:
    surface: str
    lemma: str
    pos: str = "OTHER"
    fine_pos: str | None = None
    vector_ref: str | None = None

    def __post_init__(self):
        if not self.surface:
            raise ValueError("token surface must be non-empty")
        if self.pos not in COARSE_POS:
            raise ValueError(f"pos must be one of {COARSE_POS}, got {self.pos!r}")


@dataclass(frozen=True)
class Sentence:
    tokens: tuple[Token, ...]
    embedding_ref: str | None = None
    index_in_paragraph: int = 0

    def __post_init__(self):
        object.__setattr__(self, "tokens", tuple(self.tokens))
        if not self.tokens:
            raise ValueError("sentence must contain at least one token")

    def text(self) -> str:
        """Detokenized form: surfaces joined by single spaces."""
        return " ".join(t.surface for t in self.tokens)


@dataclass(frozen=True)
class Paragraph:
    sentences: tuple[Sentence, ...]
    coref_chain_count: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "sentences", tuple(self.sentences))
        if not self.sentences:
            raise ValueError("paragraph must contain at least one sentence")
        if self.coref_chain_count is not None and self.coref_chain_count < 0:
            raise ValueError("coref_chain_count must be >= 0")

    def text(self) -> str:
        return " ".join(s.text() for s in self.sentences)


@dataclass(frozen=True)
class Document:
    id: str
    paragraphs: tuple[Paragraph, ...]
    group_label: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "paragraphs", tuple(self.paragraphs))
        if not self.id:
            raise ValueError("document id must be non-empty")
        if not self.paragraphs:
            raise ValueError("document must contain at least one paragraph")

    def sentences(self) -> Iterator[Sentence]:
        for p in self.paragraphs:
            yield from p.sentences

    def tokens(self) -> Iterator[Token]:
        for s in self.sentences():
            yield from s.tokens

    def n_sentences(self) -> int:
        return sum(len(p.sentences) for p in self.paragraphs)

    def text(self) -> str:
        return "\n".join(p.text() for p in self.paragraphs)


@dataclass(frozen=True)
class Provenance:
    source: str
    parser: str


@dataclass(frozen=True)
class Corpus:
    documents: tuple[Document, ...]
    provenance: Provenance = field(default=Provenance("<memory>", "manual"))

    def __post_init__(self):
        object.__setattr__(self, "documents", tuple(self.documents))
        ids = [d.id for d in self.documents]
        dupes = {i for i in ids if ids.count(i) > 1}
        if dupes:
            raise ValueError(f"duplicate document ids in corpus: {sorted(dupes)}")

    def __len__(self) -> int:
        return len(self.documents)

    def __iter__(self) -> Iterator[Document]:
        return iter(self.documents)


@dataclass(frozen=True)
class CorpusShapeStats:
    n_docs: int
    n_paragraphs: int
    n_sentences: int
    sentences_per_paragraph_ratio: float


def corpus_shape_stats(corpus: Corpus) -> CorpusShapeStats:
    """Aggregate counts plus the sentences-to-paragraphs ratio.

    The ratio is total sentences over total paragraphs for the whole
    corpus. It characterizes paragraph density, which matters when
    choosing paragraph-level vs document-level index variants.
    """
    if not corpus.documents:
        raise ValueError("corpus_shape_stats needs a non-empty corpus")
    n_paragraphs = sum(len(d.paragraphs) for d in corpus)
    n_sentences = sum(d.n_sentences() for d in corpus)
    return CorpusShapeStats(
        n_docs=len(corpus),
        n_paragraphs=n_paragraphs,
        n_sentences=n_sentences,
        sentences_per_paragraph_ratio=n_sentences / n_paragraphs,
    )
