"""Export raw text corpora as annotated records plus embedding sidecars.

Pipeline: read a raw .txt corpus through the scoring engine's own loader
(so segmentation and ids agree exactly with what the engine would see),
annotate each document through an AnnotationBackend, then write four
files into the profile's output directory:

* records file — one JSON record per document, in the exact schema the
  scoring engine's annotated-corpus loader accepts: every sentence gets
  an embedding_ref, every token pos/lemma/vector_ref, every paragraph a
  coref_chains count (0 when nothing corefers);
* sentence and token vector sidecars — the engine's text vector format,
  one entry per ref, uniform dimensionality per file;
* manifest — provenance block naming the model ids declared by the
  profile, the embedding dimensionality, the output files, and which
  documents were exported or skipped.

Documents that fail to annotate are logged and skipped; the export
fails only when nothing at all could be exported (or the input corpus
itself cannot be read).
"""

from __future__ import annotations

import json
import logging
import os
import re
from dataclasses import dataclass
from pathlib import Path

from gistscore import VectorStore, load_raw_corpus, parse_record, save_vectors
from gistscore.textmodel import Document

from . import __version__
from .backend import AnnotationBackend, DeterministicBackend
from .errors import ExportError, ModelUnavailable

logger = logging.getLogger("gistscore_exporter")

MANIFEST_FORMAT = "gistscore-export-manifest-v1"


@dataclass(frozen=True)
class ExportProfile:
    """What to export with, and where to put the results.

    The three model ids are recorded verbatim in the manifest's
    provenance block. `resolve_backend` only knows how to satisfy the
    built-in deterministic ids; naming anything else raises
    ModelUnavailable unless a matching backend instance is passed to
    `export_corpus` directly.
    """

    output_dir: str | os.PathLike
    sentence_embedding_model: str = DeterministicBackend.SENTENCE_MODEL_ID
    token_embedding_model: str = DeterministicBackend.TOKEN_MODEL_ID
    coref_model: str = DeterministicBackend.COREF_MODEL_ID
    embedding_dim: int = 64
    records_filename: str = "records.jsonl"
    sentence_vectors_filename: str = "sentences.vec"
    token_vectors_filename: str = "tokens.vec"
    manifest_filename: str = "manifest.json"


@dataclass(frozen=True)
class ExportResult:
    records_path: Path
    sentence_vectors_path: Path
    token_vectors_path: Path
    manifest_path: Path
    exported: tuple[str, ...]             # document ids, in output order
    skipped: tuple[tuple[str, str], ...]  # (document id, reason)


def resolve_backend(profile: ExportProfile) -> AnnotationBackend:
    """Instantiate the backend the profile's model ids describe.

    Only the built-in deterministic model ids resolve here. Other ids —
    say a transformer encoder you have loaded yourself — require passing
    the ready backend to `export_corpus`; the profile then still
    supplies the ids written to the manifest.
    """
    builtin = {
        "sentence embedding": (profile.sentence_embedding_model,
                               DeterministicBackend.SENTENCE_MODEL_ID),
        "token embedding": (profile.token_embedding_model,
                            DeterministicBackend.TOKEN_MODEL_ID),
        "coreference": (profile.coref_model, DeterministicBackend.COREF_MODEL_ID),
    }
    for role, (wanted, available) in builtin.items():
        if wanted != available:
            raise ModelUnavailable(
                f"{role} model {wanted!r} is not available in this installation "
                f"(built-in id: {available!r}); load the model yourself and pass "
                f"backend= to export_corpus")
    return DeterministicBackend(profile.embedding_dim)


def export_corpus(input_dir: str | os.PathLike, profile: ExportProfile, *,
                  backend: AnnotationBackend | None = None,
                  labels: dict[str, str] | None = None) -> ExportResult:
    """Annotate every .txt document under input_dir and write the export.

    Per-document annotation failures are logged on the
    "gistscore_exporter" logger and recorded in the manifest's skipped
    list; the document is left out of all output files. ExportError is
    raised when no document survives. Corpus-level read errors (missing
    directory, no .txt files) propagate from the corpus loader.
    """
    if backend is None:
        backend = resolve_backend(profile)
    corpus = load_raw_corpus(input_dir, labels=labels)
    documents = sorted(corpus, key=lambda d: d.id)

    records: list[dict] = []
    sentence_vectors: dict = {}
    token_vectors: dict = {}
    exported: list[str] = []
    skipped: list[tuple[str, str]] = []
    ref_prefixes: dict[str, str] = {}
    for document in documents:
        # Sidecar keys are whitespace-separated in the vector file format,
        # so whitespace in ids must not reach the refs.
        prefix = re.sub(r"\s+", "_", document.id)
        try:
            if prefix in ref_prefixes:
                raise ExportError(
                    f"sanitized id {prefix!r} collides with document "
                    f"{ref_prefixes[prefix]!r}")
            record, svecs, tvecs = _export_document(document, prefix, backend)
        except Exception as e:
            logger.warning("skipping document %s: %s", document.id, e)
            skipped.append((document.id, str(e)))
            continue
        ref_prefixes[prefix] = document.id
        records.append(record)
        sentence_vectors.update(svecs)
        token_vectors.update(tvecs)
        exported.append(document.id)

    if not records:
        raise ExportError(
            f"no documents could be exported from {input_dir}: "
            f"all {len(skipped)} failed (first: {skipped[0][1]})")

    out = Path(profile.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    records_path = out / profile.records_filename
    sentences_path = out / profile.sentence_vectors_filename
    tokens_path = out / profile.token_vectors_filename
    manifest_path = out / profile.manifest_filename

    with open(records_path, "w", encoding="utf-8", newline="\n") as fh:
        for record in records:
            fh.write(json.dumps(record, ensure_ascii=False, separators=(",", ":")))
            fh.write("\n")
    save_vectors(VectorStore(backend.embedding_dim, sentence_vectors), sentences_path)
    save_vectors(VectorStore(backend.embedding_dim, token_vectors), tokens_path)

    manifest = {
        "format": MANIFEST_FORMAT,
        "exporter_version": __version__,
        "models": {
            "sentence_embeddings": profile.sentence_embedding_model,
            "token_embeddings": profile.token_embedding_model,
            "coreference": profile.coref_model,
            "pos_lemma": backend.tagger_model_id,
        },
        "embedding_dim": backend.embedding_dim,
        "files": {
            "records": profile.records_filename,
            "sentence_vectors": profile.sentence_vectors_filename,
            "token_vectors": profile.token_vectors_filename,
        },
        "documents": {
            "exported": len(exported),
            "skipped": [{"id": doc_id, "error": reason} for doc_id, reason in skipped],
        },
    }
    with open(manifest_path, "w", encoding="utf-8", newline="\n") as fh:
        json.dump(manifest, fh, indent=2, sort_keys=True)
        fh.write("\n")

    return ExportResult(
        records_path=records_path,
        sentence_vectors_path=sentences_path,
        token_vectors_path=tokens_path,
        manifest_path=manifest_path,
        exported=tuple(exported),
        skipped=tuple(skipped),
    )


def _export_document(document: Document, prefix: str,
                     backend: AnnotationBackend) -> tuple[dict, dict, dict]:
    """Annotate one document into (record, sentence vectors, token vectors)."""
    sentence_vectors: dict = {}
    token_vectors: dict = {}
    paragraphs_out = []
    for p, paragraph in enumerate(document.paragraphs):
        tagged_sentences = []
        for sentence in paragraph.sentences:
            surfaces = [t.surface for t in sentence.tokens]
            tagged = backend.tag_sentence(surfaces)
            if len(tagged) != len(surfaces):
                raise ExportError(
                    f"backend returned {len(tagged)} tags for "
                    f"{len(surfaces)} tokens")
            tagged_sentences.append(tagged)
        sentences_out = []
        for s, tagged in enumerate(tagged_sentences):
            sentence_ref = f"{prefix}#s{p}.{s}"
            sentence_vectors[sentence_ref] = backend.sentence_vector(tagged)
            tokens_out = []
            for k, token in enumerate(tagged):
                token_ref = f"{prefix}#t{p}.{s}.{k}"
                token_vectors[token_ref] = backend.token_vector(token)
                entry = {
                    "surface": token.surface,
                    "lemma": token.lemma,
                    "pos": token.pos,
                    "vector_ref": token_ref,
                }
                if token.fine_pos is not None:
                    entry["fine_pos"] = token.fine_pos
                tokens_out.append(entry)
            sentences_out.append({"embedding_ref": sentence_ref, "tokens": tokens_out})
        paragraphs_out.append({
            "coref_chains": backend.chain_count(tagged_sentences),
            "n_sentences": len(sentences_out),
            "sentences": sentences_out,
        })
    record = {"id": document.id}
    if document.group_label is not None:
        record["group"] = document.group_label
    record["paragraphs"] = paragraphs_out
    # Self-check against the scoring engine's schema before accepting the
    # record, so a backend that emits an unknown tag (or similar) becomes
    # a logged per-document skip instead of a broken output file.
    parse_record(record, where=f"export:{document.id}")
    return record, sentence_vectors, token_vectors
