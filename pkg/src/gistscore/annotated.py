"""Ingest pre-annotated corpus records.

Record schema (normative field names; one JSON object per document,
either newline-delimited or wrapped in a single JSON array):

    {
      "id": "doc-001",
      "group": "low",                      # optional
      "paragraphs": [
        {
          "coref_chains": 2,               # optional, >= 0
          "n_sentences": 2,                # optional integrity check
          "sentences": [
            {
              "embedding_ref": "doc-001.p0.s0",   # optional
              "tokens": [
                {"surface": "Dogs", "lemma": "dog", "pos": "NOUN",
                 "fine_pos": "NNS",                 # optional
                 "vector_ref": "doc-001.p0.s0.t0"}  # optional
              ]
            }
          ]
        }
      ]
    }

Embedding refs resolve in sidecar vector stores; `validate_refs` (or the
store arguments of `load_annotated_corpus`) raises DanglingEmbeddingRef
for refs without a sidecar entry.
"""

from __future__ import annotations

import json
import os

from .errors import CorpusError, DanglingEmbeddingRef, SchemaError
from .textmodel import (
    COARSE_POS,
    Corpus,
    Document,
    Paragraph,
    Provenance,
    Sentence,
    Token,
)
from .vectors import VectorStore


def _require(cond: bool, message: str, where: str):
    if not cond:
        raise SchemaError(message, where)


def _parse_token(obj, where: str) -> Token:
    _require(isinstance(obj, dict), "token must be an object", where)
    surface = obj.get("surface")
    _require(isinstance(surface, str) and surface != "", "surface must be a non-empty string", where)
    lemma = obj.get("lemma")
    _require(isinstance(lemma, str) and lemma != "", "lemma must be a non-empty string", where)
    pos = obj.get("pos")
    _require(pos in COARSE_POS, f"pos must be one of {list(COARSE_POS)}", where)
    fine_pos = obj.get("fine_pos")
    _require(fine_pos is None or isinstance(fine_pos, str), "fine_pos must be a string", where)
    vector_ref = obj.get("vector_ref")
    _require(vector_ref is None or isinstance(vector_ref, str), "vector_ref must be a string", where)
    return Token(surface=surface, lemma=lemma, pos=pos, fine_pos=fine_pos, vector_ref=vector_ref)


def _parse_sentence(obj, index: int, where: str) -> Sentence:
    _require(isinstance(obj, dict), "sentence must be an object", where)
    ref = obj.get("embedding_ref")
    _require(ref is None or isinstance(ref, str), "embedding_ref must be a string", where)
    tokens = obj.get("tokens")
    _require(isinstance(tokens, list) and tokens, "tokens must be a non-empty list", where)
    parsed = tuple(_parse_token(t, f"{where}.tokens[{i}]") for i, t in enumerate(tokens))
    return Sentence(tokens=parsed, embedding_ref=ref, index_in_paragraph=index)


def _parse_paragraph(obj, where: str) -> Paragraph:
    _require(isinstance(obj, dict), "paragraph must be an object", where)
    chains = obj.get("coref_chains")
    _require(chains is None or (isinstance(chains, int) and not isinstance(chains, bool) and chains >= 0),
             "coref_chains must be a non-negative integer", where)
    sentences = obj.get("sentences")
    _require(isinstance(sentences, list) and sentences, "sentences must be a non-empty list", where)
    declared = obj.get("n_sentences")
    if declared is not None:
        _require(isinstance(declared, int) and declared == len(sentences),
                 f"n_sentences={declared} disagrees with {len(sentences)} sentences", where)
    parsed = tuple(_parse_sentence(s, i, f"{where}.sentences[{i}]") for i, s in enumerate(sentences))
    return Paragraph(sentences=parsed, coref_chain_count=chains)


def parse_record(obj, where: str = "record") -> Document:
    _require(isinstance(obj, dict), "record must be an object", where)
    doc_id = obj.get("id")
    _require(isinstance(doc_id, str) and doc_id != "", "id must be a non-empty string", where)
    group = obj.get("group")
    _require(group is None or isinstance(group, str), "group must be a string", where)
    paragraphs = obj.get("paragraphs")
    _require(isinstance(paragraphs, list) and paragraphs, "paragraphs must be a non-empty list", where)
    parsed = tuple(_parse_paragraph(p, f"{where}.paragraphs[{i}]") for i, p in enumerate(paragraphs))
    return Document(id=doc_id, paragraphs=parsed, group_label=group)


def _iter_records(path: str | os.PathLike):
    """Yield (location, json_object) pairs from a JSONL file or a JSON array."""
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise CorpusError(f"cannot read corpus file {path}: {e}") from e
    stripped = text.lstrip()
    if stripped.startswith("["):
        try:
            records = json.loads(text)
        except json.JSONDecodeError as e:
            raise SchemaError(f"invalid JSON: {e}", str(path))
        if not isinstance(records, list):
            raise SchemaError("top-level JSON must be an array of records", str(path))
        for i, obj in enumerate(records):
            yield f"{path}[{i}]", obj
    else:
        for lineno, line in enumerate(text.splitlines(), 1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as e:
                raise SchemaError(f"invalid JSON: {e}", f"{path}:{lineno}")
            yield f"{path}:{lineno}", obj


def load_annotated_corpus(path: str | os.PathLike,
                          sentence_store: VectorStore | None = None,
                          token_store: VectorStore | None = None,
                          labels: dict[str, str] | None = None) -> Corpus:
    """Load an annotated corpus record file.

    When sidecar stores are supplied, every embedding_ref / vector_ref is
    checked against them and DanglingEmbeddingRef is raised on a miss.
    A sidecar label map fills group labels for documents without one.
    """
    documents = []
    seen = set()
    for where, obj in _iter_records(path):
        doc = parse_record(obj, where)
        if doc.id in seen:
            raise SchemaError(f"duplicate document id {doc.id!r}", where)
        seen.add(doc.id)
        if doc.group_label is None and labels and doc.id in labels:
            doc = Document(id=doc.id, paragraphs=doc.paragraphs, group_label=labels[doc.id])
        documents.append(doc)
    if not documents:
        raise SchemaError("no records found", str(path))
    corpus = Corpus(tuple(documents), Provenance(source=str(path), parser="annotated-records"))
    if sentence_store is not None or token_store is not None:
        validate_refs(corpus, sentence_store, token_store)
    return corpus


def validate_refs(corpus: Corpus, sentence_store: VectorStore | None,
                  token_store: VectorStore | None):
    """Check that every embedding reference resolves in its sidecar store."""
    for doc in corpus:
        for paragraph in doc.paragraphs:
            for sentence in paragraph.sentences:
                if sentence_store is not None and sentence.embedding_ref is not None:
                    if sentence_store.get(sentence.embedding_ref) is None:
                        raise DanglingEmbeddingRef(
                            f"{doc.id}: sentence embedding_ref {sentence.embedding_ref!r} "
                            "has no sidecar entry")
                if token_store is not None:
                    for token in sentence.tokens:
                        if token.vector_ref is not None and token_store.get(token.vector_ref) is None:
                            raise DanglingEmbeddingRef(
                                f"{doc.id}: token vector_ref {token.vector_ref!r} "
                                "has no sidecar entry")
