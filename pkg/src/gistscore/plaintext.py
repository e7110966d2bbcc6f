"""Parse raw plain-text documents and directories of .txt files.

Raw-corpus convention: one UTF-8 .txt file per document, paragraphs
separated by one or more newline characters. Group labels are resolved
from (in priority order) an explicit label argument, the immediate
subdirectory name, then a sidecar label file.
"""

from __future__ import annotations

import os
from pathlib import Path

from .errors import CorpusError, EmptyDocument
from .segmentation import split_paragraphs, split_sentences, tokenize
from .textmodel import Corpus, Document, Paragraph, Provenance, Sentence, Token


def parse_plain_text(raw: str, id: str, group_label: str | None = None,
                     abbrevs: frozenset[str] | None = None) -> Document:
    """Build a Document from raw text.

    Paragraphs split on newline runs, sentences via the rule-based
    segmenter, tokens on whitespace/punctuation (punctuation is its own
    token). Lemma defaults to the lowercased surface and pos to OTHER:
    POS-dependent indices then fail loudly with MissingResource instead
    of computing on junk, until annotation ingestion fills real tags.
    """
    blocks = split_paragraphs(raw)
    if not blocks:
        raise EmptyDocument(f"document {id!r} has no non-whitespace content")
    paragraphs = []
    for block in blocks:
        sentences = []
        for i, sent_text in enumerate(split_sentences(block, abbrevs)):
            tokens = tuple(Token(surface=t, lemma=t.lower()) for t in tokenize(sent_text))
            if tokens:
                sentences.append(Sentence(tokens=tokens, index_in_paragraph=len(sentences)))
        if sentences:
            paragraphs.append(Paragraph(sentences=tuple(sentences)))
    if not paragraphs:
        raise EmptyDocument(f"document {id!r} has no tokenizable content")
    return Document(id=id, paragraphs=tuple(paragraphs), group_label=group_label)


def load_label_file(path: str | os.PathLike) -> dict[str, str]:
    """Sidecar label file: one "doc_id<TAB>label" per line, # comments allowed."""
    labels = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 2 or not parts[0] or not parts[1]:
                raise CorpusError(f"{path}:{lineno}: expected 'doc_id<TAB>label'")
            labels[parts[0]] = parts[1]
    return labels


def load_raw_corpus(directory: str | os.PathLike, labels: dict[str, str] | None = None,
                    abbrevs: frozenset[str] | None = None) -> Corpus:
    """Read every .txt file under a directory into a Corpus.

    Document ids are the extension-stripped paths relative to the corpus
    root (slash-joined), which keeps them unique when group subdirectories
    reuse file names. The immediate subdirectory supplies the group label;
    a sidecar label map fills documents that still have none.
    """
    root = Path(directory)
    if not root.is_dir():
        raise CorpusError(f"raw corpus directory not found: {root}")
    files = sorted(root.rglob("*.txt"))
    if not files:
        raise CorpusError(f"no .txt files under {root}")
    labels = labels or {}
    documents = []
    for path in files:
        rel = path.relative_to(root)
        doc_id = str(rel.with_suffix("")).replace(os.sep, "/")
        group = rel.parts[0] if len(rel.parts) > 1 else None
        if group is None:
            group = labels.get(doc_id)
        documents.append(
            parse_plain_text(path.read_text("utf-8"), id=doc_id, group_label=group,
                             abbrevs=abbrevs)
        )
    return Corpus(tuple(documents), Provenance(source=str(root), parser="plaintext-dir"))
