"""Gist Inference Score engine.

Computes per-document cohesion, verb-overlap, concreteness,
imageability, and hypernymy indices; z-normalizes them across a corpus;
combines them into a single weighted score (GIS); and evaluates how
well any combination of index implementations separates two labeled
groups of documents.
"""

from .errors import (ConfigError, CorpusError, CycleError, DanglingEmbeddingRef,
                     DimMismatch, DuplicateKey, EmptyDocument, GistScoreError,
                     GroupTooSmall, MissingLabel, MissingResource, MissingVariant,
                     NoPairs, ParseError, PatternCompileError, ResourceError,
                     SchemaError, TooFewDocuments, UnknownSynset)
from .textmodel import (Corpus, CorpusShapeStats, Document, Paragraph, Provenance,
                        Sentence, Token, corpus_shape_stats)
from .plaintext import load_label_file, load_raw_corpus, parse_plain_text
from .annotated import load_annotated_corpus, parse_record, validate_refs
from .vectors import VectorStore, cosine, load_vectors, save_vectors
from .wordnetdb import (Synset, WordNetDb, hypernym_path_length, load_wordnet,
                        same_synset)
from .lexicon import LexiconEntry, PsycholinguisticLexicon, load_lexicon
from .connectives import (ConnectivePattern, ConnectivePatternSet, default_patterns,
                          load_patterns)
from .pairs import (PairAggregate, POSTFIXES, SCHEMES, VariantScheme, aggregate,
                    enumerate_pairs)
from .indices import (ComputeOptions, IndexVector, Resources, VARIANT_NAMES,
                      compute_index_vector, concreteness_imageability, coref_index,
                      hypernymy_nouns_verbs, pcdc, pcref, smcause_embeddings,
                      smcause_wordnet)
from .ttest import TTestResult, regularized_incomplete_beta, t_test_two_sample, two_tailed_p
from .scoring import (DEFAULT_WEIGHTS, FAMILIES, GisConfig, GisResult, NormEntry,
                      ScoredBatch, compute_gis, config_hash, enumerate_combinations,
                      load_norms, save_norms, zscore_batch)
from .evaluation import (DEFAULT_THRESHOLD, GroupComparison, RobustnessResult,
                         SearchReport, SplitMix64, combination_search, compare_groups,
                         robustness_split_eval, significant_intersection,
                         stratified_split)
from .runconfig import RunConfig, load_resources, load_run_config

__version__ = "0.1.0"

__all__ = [
    "ConfigError", "CorpusError", "CycleError", "DanglingEmbeddingRef",
    "DimMismatch", "DuplicateKey", "EmptyDocument", "GistScoreError",
    "GroupTooSmall", "MissingLabel", "MissingResource", "MissingVariant",
    "NoPairs", "ParseError", "PatternCompileError", "ResourceError",
    "SchemaError", "TooFewDocuments", "UnknownSynset",
    "Corpus", "CorpusShapeStats", "Document", "Paragraph", "Provenance",
    "Sentence", "Token", "corpus_shape_stats",
    "load_label_file", "load_raw_corpus", "parse_plain_text",
    "load_annotated_corpus", "parse_record", "validate_refs",
    "VectorStore", "cosine", "load_vectors", "save_vectors",
    "Synset", "WordNetDb", "hypernym_path_length", "load_wordnet", "same_synset",
    "LexiconEntry", "PsycholinguisticLexicon", "load_lexicon",
    "ConnectivePattern", "ConnectivePatternSet", "default_patterns", "load_patterns",
    "PairAggregate", "POSTFIXES", "SCHEMES", "VariantScheme", "aggregate",
    "enumerate_pairs",
    "ComputeOptions", "IndexVector", "Resources", "VARIANT_NAMES",
    "compute_index_vector", "concreteness_imageability", "coref_index",
    "hypernymy_nouns_verbs", "pcdc", "pcref", "smcause_embeddings",
    "smcause_wordnet",
    "TTestResult", "regularized_incomplete_beta", "t_test_two_sample",
    "two_tailed_p",
    "DEFAULT_WEIGHTS", "FAMILIES", "GisConfig", "GisResult", "NormEntry",
    "ScoredBatch", "compute_gis", "config_hash", "enumerate_combinations",
    "load_norms", "save_norms", "zscore_batch",
    "DEFAULT_THRESHOLD", "GroupComparison", "RobustnessResult", "SearchReport",
    "SplitMix64", "combination_search", "compare_groups", "robustness_split_eval",
    "significant_intersection", "stratified_split",
    "RunConfig", "load_resources", "load_run_config",
    "__version__",
]
