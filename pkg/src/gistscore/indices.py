"""Per-document index computations producing an IndexVector.

Index families and their variants (19 values in a full vector; the five
families with multiple implementations contribute the 17 selectable
variants, PCDC and WRDHYPnv have a single implementation each):

    PCREF_1/_a/_1p/_ap   sentence-embedding cosine cohesion
    CoREF                coreference-chain density per paragraph
    PCDC                 causal connectives per sentence
    SMCAUSe_1/_a/_1p/_ap verb-embedding cosine overlap
    SMCAUSwn_1/_a/_1p/_ap verb WordNet-synset overlap
    PCCNC_mrc/_megahr    mean word concreteness
    WRDIMGc_mrc/_megahr  mean word imageability
    WRDHYPnv             mean hypernym path depth of nouns and verbs

Verb-based variants define locality over the verb sequence in document
order (adjacent verbs), grouped by the paragraph containing each verb --
the closest structural analogue of the sentence-level schemes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .connectives import ConnectivePatternSet, default_patterns
from .errors import MissingResource, NoPairs
from .lexicon import PsycholinguisticLexicon
from .pairs import SCHEMES, VariantScheme, aggregate, enumerate_pairs
from .textmodel import CONTENT_POS, Document, Sentence, Token
from .vectors import VectorStore, cosine
from .wordnetdb import WordNetDb, hypernym_path_length, same_synset

VARIANT_NAMES = (
    "PCREF_1", "PCREF_a", "PCREF_1p", "PCREF_ap",
    "CoREF",
    "PCDC",
    "SMCAUSe_1", "SMCAUSe_a", "SMCAUSe_1p", "SMCAUSe_ap",
    "SMCAUSwn_1", "SMCAUSwn_a", "SMCAUSwn_1p", "SMCAUSwn_ap",
    "PCCNC_mrc", "PCCNC_megahr",
    "WRDIMGc_mrc", "WRDIMGc_megahr",
    "WRDHYPnv",
)


@dataclass
class Resources:
    """The loaded linguistic resources the indices draw on.

    All fields are optional; a variant whose resources are absent reports
    MissingResource in diagnostics instead of computing garbage.
    """
    sentence_store: VectorStore | None = None  # sidecar, keyed by embedding_ref
    token_store: VectorStore | None = None     # sidecar, keyed by vector_ref
    word_store: VectorStore | None = None      # static word-form vectors
    wordnet: WordNetDb | None = None
    mrc: PsycholinguisticLexicon | None = None
    megahr: PsycholinguisticLexicon | None = None
    patterns: ConnectivePatternSet | None = None  # None -> shipped default set


@dataclass(frozen=True)
class ComputeOptions:
    enabled: frozenset[str] | None = None  # None -> every variant
    wn_normalization: str = "sentences"    # "sentences" | "pairs"
    verb_stoplist: frozenset[str] = frozenset()

    def wants(self, name: str) -> bool:
        return self.enabled is None or name in self.enabled


@dataclass(frozen=True)
class IndexVector:
    doc_id: str
    values: dict[str, float]
    diagnostics: dict[str, dict] = field(default_factory=dict)

    def __post_init__(self):
        unknown = set(self.values) - set(VARIANT_NAMES)
        if unknown:
            raise ValueError(f"unknown variant names: {sorted(unknown)}")
        for name, value in self.values.items():
            if not math.isfinite(value):
                raise ValueError(f"{self.doc_id}: non-finite value for {name}")

    def get(self, name: str) -> float | None:
        return self.values.get(name)


# --- embedding resolution ----------------------------------------------------

def sentence_embedding(sentence: Sentence, res: Resources) -> np.ndarray | None:
    """Sidecar embedding when referenced, else the static-backend mean of
    in-vocabulary token vectors; None when neither resolves."""
    if sentence.embedding_ref is not None and res.sentence_store is not None:
        vec = res.sentence_store.get(sentence.embedding_ref)
        if vec is not None:
            return vec
    if res.word_store is not None:
        vecs = [v for v in (res.word_store.lookup(t.surface) for t in sentence.tokens)
                if v is not None]
        if vecs:
            return np.mean(vecs, axis=0)
    return None


def token_vector(token: Token, res: Resources) -> np.ndarray | None:
    if token.vector_ref is not None and res.token_store is not None:
        vec = res.token_store.get(token.vector_ref)
        if vec is not None:
            return vec
    if res.word_store is not None:
        return res.word_store.lookup(token.surface)
    return None


def _doc_verbs(doc: Document, stoplist: frozenset[str]) -> list[list[Token]]:
    """Verb tokens grouped by paragraph, in document order."""
    return [[t for s in p.sentences for t in s.tokens
             if t.pos == "VERB" and t.lemma.lower() not in stoplist]
            for p in doc.paragraphs]


def _cosine_aggregate(groups, vectors, scheme):
    """Aggregate cosine over precomputed unit vectors (indices as units)."""
    def f(i: int, j: int) -> float | None:
        a, b = vectors[i], vectors[j]
        if a is None or b is None:
            return None
        return cosine(a, b)
    return aggregate(groups, scheme, f)


# --- index operations --------------------------------------------------------

def pcref(doc: Document, scheme: VariantScheme, res: Resources) -> float:
    """Referential cohesion: mean cosine over sentence-embedding pairs."""
    return _pcref_agg(doc, scheme, res).value


def _pcref_agg(doc: Document, scheme: VariantScheme, res: Resources):
    embeddings = []
    groups = []
    idx = 0
    for p in doc.paragraphs:
        group = []
        for s in p.sentences:
            embeddings.append(sentence_embedding(s, res))
            group.append(idx)
            idx += 1
        groups.append(group)
    return _cosine_aggregate(groups, embeddings, scheme)


def coref_index(doc: Document) -> float:
    """Mean over paragraphs of coreference chains per sentence."""
    ratios = []
    for i, p in enumerate(doc.paragraphs):
        if p.coref_chain_count is None:
            raise MissingResource(
                f"{doc.id}: paragraph {i} lacks a coreference chain count "
                "(requires annotated-corpus ingestion)")
        ratios.append(p.coref_chain_count / len(p.sentences))
    return sum(ratios) / len(ratios)


def pcdc(doc: Document, patterns: ConnectivePatternSet | None = None) -> float:
    """Causal connective matches per sentence, over the whole document text."""
    if patterns is None:
        patterns = default_patterns()
    return patterns.count_matches(doc.text()) / doc.n_sentences()


def smcause_embeddings(doc: Document, scheme: VariantScheme, res: Resources,
                       stoplist: frozenset[str] = frozenset()) -> float:
    """Verb overlap: mean cosine over verb-vector pairs."""
    return _smcause_e_agg(doc, scheme, res, stoplist).value


def _smcause_e_agg(doc: Document, scheme: VariantScheme, res: Resources,
                   stoplist: frozenset[str]):
    verb_groups = _doc_verbs(doc, stoplist)
    n_verbs = sum(len(g) for g in verb_groups)
    if n_verbs < 2:
        raise MissingResource(f"{doc.id}: fewer than two verb tokens")
    vectors = [token_vector(t, res) for g in verb_groups for t in g]
    if all(v is None for v in vectors):
        raise MissingResource(f"{doc.id}: no verb token resolves to a vector")
    groups = []
    idx = 0
    for g in verb_groups:
        groups.append(list(range(idx, idx + len(g))))
        idx += len(g)
    return _cosine_aggregate(groups, vectors, scheme)


def smcause_wordnet(doc: Document, scheme: VariantScheme, db: WordNetDb,
                    normalization: str = "sentences",
                    stoplist: frozenset[str] = frozenset()) -> float:
    """Verb overlap via shared synsets.

    Pair score is 1 iff the two verbs share a synset. The index is the
    sum of pair scores over the number of sentences in the document --
    this can exceed 1 when pairs outnumber sentences. Pass
    normalization="pairs" for a plain pair mean comparable to the other
    pairwise indices.
    """
    if normalization not in ("sentences", "pairs"):
        raise ValueError(f"normalization must be sentences|pairs, got {normalization!r}")
    verb_groups = _doc_verbs(doc, stoplist)
    verbs = [t for g in verb_groups for t in g]
    if len(verbs) < 2:
        raise MissingResource(f"{doc.id}: fewer than two verb tokens")
    pairs = enumerate_pairs(verb_groups, scheme)
    matches = sum(
        1 for i, j in pairs if same_synset(db, verbs[i].lemma, verbs[j].lemma, "VERB"))
    if normalization == "pairs":
        return matches / len(pairs)
    return matches / doc.n_sentences()


def concreteness_imageability(doc: Document, lex: PsycholinguisticLexicon
                              ) -> tuple[float, float, float]:
    """Mean concreteness and imageability over matched content tokens.

    Returns (concreteness, imageability, coverage); coverage is the
    matched fraction of content-POS tokens. Raises MissingResource when
    nothing matches.
    """
    content = [t for t in doc.tokens() if t.pos in CONTENT_POS]
    if not content:
        raise MissingResource(
            f"{doc.id}: no content-POS tokens (corpus probably lacks POS tags)")
    entries = [e for e in (lex.lookup(t) for t in content) if e is not None]
    if not entries:
        raise MissingResource(f"{doc.id}: no token matched the {lex.source} lexicon")
    conc = sum(e.concreteness for e in entries) / len(entries)
    imag = sum(e.imageability for e in entries) / len(entries)
    return conc, imag, len(entries) / len(content)


def hypernymy_nouns_verbs(doc: Document, db: WordNetDb) -> float:
    """Mean hypernym path depth over noun/verb tokens.

    Each token's score is the mean shortest-path-to-root length over all
    synsets matching its lemma and POS (no sense selection); the index
    averages those scores over the tokens that resolved to any synset.
    """
    word_scores = []
    for token in doc.tokens():
        if token.pos not in ("NOUN", "VERB"):
            continue
        sids = db.synsets_for(token.lemma, token.pos)
        if not sids:
            continue
        depths = [hypernym_path_length(db, sid) for sid in sids]
        word_scores.append(sum(depths) / len(depths))
    if not word_scores:
        raise MissingResource(f"{doc.id}: no noun/verb token resolves to a synset")
    return sum(word_scores) / len(word_scores)


# --- full vector -------------------------------------------------------------

def compute_index_vector(doc: Document, res: Resources,
                         options: ComputeOptions | None = None) -> IndexVector:
    """Compute every enabled variant; failures land in diagnostics.

    Pure given immutable resources: documents can be scored concurrently
    with results independent of scheduling.
    """
    opt = options or ComputeOptions()
    values: dict[str, float] = {}
    diagnostics: dict[str, dict] = {}

    def record_error(name: str, exc: Exception):
        diagnostics[name] = {"status": type(exc).__name__, "detail": str(exc)}

    for postfix, scheme in SCHEMES.items():
        name = f"PCREF{postfix}"
        if opt.wants(name):
            try:
                agg = _pcref_agg(doc, scheme, res)
                values[name] = agg.value
                diagnostics[name] = {"status": "ok", "pairs": agg.n_pairs,
                                     "skipped": agg.n_skipped}
            except (NoPairs, MissingResource) as e:
                record_error(name, e)

    if opt.wants("CoREF"):
        try:
            values["CoREF"] = coref_index(doc)
            diagnostics["CoREF"] = {"status": "ok"}
        except MissingResource as e:
            record_error("CoREF", e)

    if opt.wants("PCDC"):
        values["PCDC"] = pcdc(doc, res.patterns)
        diagnostics["PCDC"] = {"status": "ok"}

    for postfix, scheme in SCHEMES.items():
        name = f"SMCAUSe{postfix}"
        if opt.wants(name):
            try:
                agg = _smcause_e_agg(doc, scheme, res, opt.verb_stoplist)
                values[name] = agg.value
                diagnostics[name] = {"status": "ok", "pairs": agg.n_pairs,
                                     "skipped": agg.n_skipped}
            except (NoPairs, MissingResource) as e:
                record_error(name, e)

    for postfix, scheme in SCHEMES.items():
        name = f"SMCAUSwn{postfix}"
        if opt.wants(name):
            if res.wordnet is None:
                record_error(name, MissingResource("no WordNet database loaded"))
                continue
            try:
                values[name] = smcause_wordnet(doc, scheme, res.wordnet,
                                               opt.wn_normalization, opt.verb_stoplist)
                diagnostics[name] = {"status": "ok"}
            except (NoPairs, MissingResource) as e:
                record_error(name, e)

    for source in ("mrc", "megahr"):
        conc_name, imag_name = f"PCCNC_{source}", f"WRDIMGc_{source}"
        if not (opt.wants(conc_name) or opt.wants(imag_name)):
            continue
        lex = getattr(res, source)
        if lex is None:
            err = MissingResource(f"no {source} lexicon loaded")
            for name in (conc_name, imag_name):
                if opt.wants(name):
                    record_error(name, err)
            continue
        try:
            conc, imag, coverage = concreteness_imageability(doc, lex)
            if opt.wants(conc_name):
                values[conc_name] = conc
                diagnostics[conc_name] = {"status": "ok", "coverage": coverage}
            if opt.wants(imag_name):
                values[imag_name] = imag
                diagnostics[imag_name] = {"status": "ok", "coverage": coverage}
        except MissingResource as e:
            for name in (conc_name, imag_name):
                if opt.wants(name):
                    record_error(name, e)

    if opt.wants("WRDHYPnv"):
        if res.wordnet is None:
            record_error("WRDHYPnv", MissingResource("no WordNet database loaded"))
        else:
            try:
                values["WRDHYPnv"] = hypernymy_nouns_verbs(doc, res.wordnet)
                diagnostics["WRDHYPnv"] = {"status": "ok"}
            except MissingResource as e:
                record_error("WRDHYPnv", e)

    return IndexVector(doc_id=doc.id, values=values, diagnostics=diagnostics)
