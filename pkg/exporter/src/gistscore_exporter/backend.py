"""Annotation backends: POS/lemma tagging, embeddings, chain counts.

`AnnotationBackend` is the seam between the export pipeline (ref naming,
record assembly, sidecar files) and the models that produce linguistic
annotations. The built-in `DeterministicBackend` needs no downloads and
no external services: it tags with closed-class lists plus affix rules,
embeds with hash-seeded random unit vectors, and counts coreference
chains as repeated-noun lemma groups. Two properties make it useful
despite its simplicity:

* fully deterministic — the same text always produces byte-identical
  exports, so downstream scoring is reproducible and diffable;
* semantically consistent where the scoring engine needs it — repeated
  lemmas get identical vectors (cosine 1), distinct lemmas get nearly
  orthogonal ones, so overlap-style indices behave sensibly.

Heavier neural backends (transformer sentence encoders, trained
coreference resolvers) plug in by implementing the same protocol and
passing the instance to `export_corpus(..., backend=...)`; the profile's
model ids then land in the manifest for provenance.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from typing import Protocol, Sequence, runtime_checkable

import numpy as np

from .errors import ExportError
from .wordlists import (ADJ_LEMMAS, ADPOSITIONS_CONJUNCTIONS, ADV_LEMMAS,
                        ANAPHORIC_PRONOUNS, AUXILIARIES, DETERMINERS,
                        IRREGULAR_NOUN_PLURAL, IRREGULAR_VERB_PAST, PRONOUNS,
                        VERB_LEMMAS)


@dataclass(frozen=True)
class TaggedToken:
    """One token after tagging: coarse pos, lemma, optional fine tag."""
    surface: str
    pos: str          # one of the coarse tags the scoring engine accepts
    lemma: str
    fine_pos: str | None = None


@runtime_checkable
class AnnotationBackend(Protocol):
    """What the export pipeline needs from an annotation model stack.

    Implementations must be deterministic per instance configuration:
    `export_corpus` relies on that for reproducible output files.
    """

    embedding_dim: int
    tagger_model_id: str

    def tag_sentence(self, surfaces: Sequence[str]) -> tuple[TaggedToken, ...]:
        """Tag one sentence; returns one TaggedToken per surface, in order."""
        ...

    def token_vector(self, token: TaggedToken) -> np.ndarray:
        """Embedding for one token, shape (embedding_dim,)."""
        ...

    def sentence_vector(self, tagged: Sequence[TaggedToken]) -> np.ndarray:
        """Embedding for one tagged sentence, shape (embedding_dim,)."""
        ...

    def chain_count(self, paragraph: Sequence[Sequence[TaggedToken]]) -> int:
        """Number of coreference chains with a mention in this paragraph."""
        ...


def _seeded_unit_vector(namespace: str, key: str, dim: int) -> np.ndarray:
    """Unit vector drawn from an RNG seeded by sha256(namespace + key)."""
    digest = hashlib.sha256(f"{namespace}\x00{key}".encode("utf-8")).digest()
    rng = np.random.default_rng(int.from_bytes(digest[:8], "big"))
    raw = rng.standard_normal(dim)
    norm = float(np.linalg.norm(raw))
    if norm == 0.0:  # unreachable for a continuous RNG; keeps the contract total
        raw[0] = 1.0
        norm = 1.0
    return raw / norm


class DeterministicBackend:
    """Offline annotation stack built from rules and hash embeddings.

    Tagging order (first match wins): non-alphabetic -> OTHER; closed
    classes (determiner, pronoun, auxiliary, adposition/conjunction) ->
    OTHER with the subcategory in fine_pos; irregular inflection tables;
    affix-stripped lookup in the verb, adjective, and adverb lemma
    lexicons; default NOUN with plural stripping.
    """

    SENTENCE_MODEL_ID = "hash-mean-sentence-v1"
    TOKEN_MODEL_ID = "hash-token-v1"
    COREF_MODEL_ID = "lemma-chain-coref-v1"
    TAGGER_MODEL_ID = "affix-lexicon-tagger-v1"

    def __init__(self, embedding_dim: int = 64):
        if embedding_dim < 1:
            raise ExportError(f"embedding_dim must be >= 1, got {embedding_dim}")
        self.embedding_dim = embedding_dim
        self.tagger_model_id = self.TAGGER_MODEL_ID
        self._token_cache: dict[str, np.ndarray] = {}

    # ------------------------------------------------------------------
    # tagging

    def tag_sentence(self, surfaces: Sequence[str]) -> tuple[TaggedToken, ...]:
        return tuple(self._tag(surface) for surface in surfaces)

    def _tag(self, surface: str) -> TaggedToken:
        if not surface:
            raise ExportError("cannot tag an empty token surface")
        lower = surface.lower()
        if not any(c.isalpha() for c in lower):
            return TaggedToken(surface, "OTHER", lower)
        if lower in DETERMINERS:
            return TaggedToken(surface, "OTHER", lower, "DET")
        if lower in PRONOUNS:
            return TaggedToken(surface, "OTHER", lower, "PRON")
        if lower in AUXILIARIES:
            return TaggedToken(surface, "OTHER", lower, "AUX")
        if lower in ADPOSITIONS_CONJUNCTIONS:
            return TaggedToken(surface, "OTHER", lower, "ADP")
        if lower in IRREGULAR_VERB_PAST:
            return TaggedToken(surface, "VERB", IRREGULAR_VERB_PAST[lower])
        if lower in IRREGULAR_NOUN_PLURAL:
            return TaggedToken(surface, "NOUN", IRREGULAR_NOUN_PLURAL[lower])
        verb = self._verb_base(lower)
        if verb is not None:
            return TaggedToken(surface, "VERB", verb)
        adj = self._adjective_base(lower)
        if adj is not None:
            return TaggedToken(surface, "ADJ", adj)
        if lower in ADV_LEMMAS or (lower.endswith("ly") and len(lower) > 4):
            return TaggedToken(surface, "ADV", lower)
        return TaggedToken(surface, "NOUN", self._noun_base(lower))

    @staticmethod
    def _verb_base(lower: str) -> str | None:
        if lower in VERB_LEMMAS:
            return lower
        candidates = []
        if lower.endswith("ies") and len(lower) > 4:
            candidates.append(lower[:-3] + "y")          # carries -> carry
        if lower.endswith("es") and len(lower) > 3:
            candidates.append(lower[:-2])                # watches -> watch
        if lower.endswith("s") and not lower.endswith("ss") and len(lower) > 2:
            candidates.append(lower[:-1])                # runs -> run
        if lower.endswith("ing") and len(lower) > 4:
            stem = lower[:-3]
            candidates.extend((stem, stem + "e"))        # walking, making
            if len(stem) > 2 and stem[-1] == stem[-2]:
                candidates.append(stem[:-1])             # running -> run
        if lower.endswith("ied") and len(lower) > 4:
            candidates.append(lower[:-3] + "y")          # carried -> carry
        if lower.endswith("ed") and len(lower) > 3:
            stem = lower[:-2]
            candidates.extend((stem, stem + "e"))        # walked, liked
            if len(stem) > 2 and stem[-1] == stem[-2]:
                candidates.append(stem[:-1])             # stopped -> stop
        for candidate in candidates:
            if candidate in VERB_LEMMAS:
                return candidate
        return None

    @staticmethod
    def _adjective_base(lower: str) -> str | None:
        if lower in ADJ_LEMMAS:
            return lower
        for suffix in ("est", "er"):
            if lower.endswith(suffix) and len(lower) > len(suffix) + 1:
                stem = lower[: -len(suffix)]
                candidates = [stem, stem + "e"]          # faster, larger
                if len(stem) > 2 and stem[-1] == stem[-2]:
                    candidates.append(stem[:-1])         # bigger -> big
                if stem.endswith("i"):
                    candidates.append(stem[:-1] + "y")   # happiest -> happy
                for candidate in candidates:
                    if candidate in ADJ_LEMMAS:
                        return candidate
        return None

    @staticmethod
    def _noun_base(lower: str) -> str:
        if lower.endswith("ies") and len(lower) > 4:
            return lower[:-3] + "y"                      # puppies -> puppy
        for suffix in ("ches", "shes", "sses", "xes", "zes"):
            if lower.endswith(suffix) and len(lower) > len(suffix) + 1:
                return lower[:-2]                        # boxes -> box
        if (lower.endswith("s") and len(lower) > 3
                and not lower.endswith(("ss", "us", "is"))):
            return lower[:-1]                            # dogs -> dog
        return lower

    # ------------------------------------------------------------------
    # embeddings

    def token_vector(self, token: TaggedToken) -> np.ndarray:
        vec = self._token_cache.get(token.lemma)
        if vec is None:
            vec = _seeded_unit_vector("token", token.lemma, self.embedding_dim)
            self._token_cache[token.lemma] = vec
        return vec

    def sentence_vector(self, tagged: Sequence[TaggedToken]) -> np.ndarray:
        if not tagged:
            raise ExportError("cannot embed an empty sentence")
        words = [t for t in tagged if any(c.isalpha() for c in t.surface)]
        pooled = list(words) if words else list(tagged)
        mean = np.mean([self.token_vector(t) for t in pooled], axis=0)
        norm = float(np.linalg.norm(mean))
        if norm < 1e-12:  # degenerate cancellation: fall back to a text hash
            return _seeded_unit_vector(
                "sentence", "\x00".join(t.lemma for t in tagged), self.embedding_dim)
        return mean / norm

    # ------------------------------------------------------------------
    # coreference

    def chain_count(self, paragraph: Sequence[Sequence[TaggedToken]]) -> int:
        """Chains = noun lemmas mentioned at least twice in the paragraph.

        Third-person pronouns attach to the most recent preceding noun,
        so "the dog ... it ..." extends the dog chain. Pronouns with no
        antecedent yet are ignored. A paragraph where nothing repeats
        has zero chains.
        """
        mentions: dict[str, int] = {}
        last_noun: str | None = None
        for sentence in paragraph:
            for token in sentence:
                if token.pos == "NOUN":
                    mentions[token.lemma] = mentions.get(token.lemma, 0) + 1
                    last_noun = token.lemma
                elif token.lemma in ANAPHORIC_PRONOUNS and last_noun is not None:
                    mentions[last_noun] = mentions.get(last_noun, 0) + 1
        return sum(1 for count in mentions.values() if count >= 2)
