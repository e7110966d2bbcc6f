"""Command line front end: gistscore-export.

Exit codes follow the scoring engine's CLI conventions:
0 success; 2 bad usage or configuration; 3 a named model is unavailable;
4 the input corpus (or label file) cannot be read.
"""

from __future__ import annotations

import argparse
import logging
import sys

from gistscore import GistScoreError, load_label_file

from . import __version__
from .backend import DeterministicBackend
from .errors import ExportError, ModelUnavailable
from .export import ExportProfile, export_corpus

EXIT_CONFIG = 2
EXIT_MODEL = 3
EXIT_CORPUS = 4


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gistscore-export",
        description="Annotate a raw .txt corpus into scoring-engine records "
                    "plus sentence/token embedding sidecars.",
        epilog="exit codes: 0 success, 2 bad configuration, "
               "3 model unavailable, 4 unreadable corpus")
    parser.add_argument("--input", required=True,
                        help="directory of raw .txt documents (subdirectory = group label)")
    parser.add_argument("--out", required=True,
                        help="output directory for records, sidecars, and manifest")
    parser.add_argument("--dim", type=int, default=64,
                        help="embedding dimensionality (default: 64)")
    parser.add_argument("--sentence-model",
                        default=DeterministicBackend.SENTENCE_MODEL_ID,
                        help="sentence embedding model id (default: %(default)s)")
    parser.add_argument("--token-model",
                        default=DeterministicBackend.TOKEN_MODEL_ID,
                        help="token embedding model id (default: %(default)s)")
    parser.add_argument("--coref-model",
                        default=DeterministicBackend.COREF_MODEL_ID,
                        help="coreference model id (default: %(default)s)")
    parser.add_argument("--labels",
                        help="optional TSV label file (doc_id<TAB>label) for "
                             "documents without a group subdirectory")
    parser.add_argument("--version", action="version",
                        version=f"%(prog)s {__version__}")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(stream=sys.stderr, level=logging.WARNING,
                        format="%(levelname)s: %(message)s")
    try:
        labels = load_label_file(args.labels) if args.labels else None
    except (OSError, GistScoreError) as e:
        print(f"error: cannot read label file: {e}", file=sys.stderr)
        return EXIT_CORPUS
    profile = ExportProfile(
        output_dir=args.out,
        sentence_embedding_model=args.sentence_model,
        token_embedding_model=args.token_model,
        coref_model=args.coref_model,
        embedding_dim=args.dim,
    )
    try:
        result = export_corpus(args.input, profile, labels=labels)
    except ModelUnavailable as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_MODEL
    except ExportError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CONFIG
    except GistScoreError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CORPUS
    for doc_id, reason in result.skipped:
        print(f"skipped {doc_id}: {reason}", file=sys.stderr)
    print(f"exported {len(result.exported)} documents -> {result.records_path}")
    print(f"manifest: {result.manifest_path}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
