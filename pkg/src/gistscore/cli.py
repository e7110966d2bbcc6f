"""Batch command-line front end.

Subcommands:
    score       index variants + GIS per document, as CSV
    evaluate    low-vs-high group comparison on GIS
    search      sweep all variant combinations, rank by group distance
    robustness  seeded train/test splits; re-test the winning combination
    stats       corpus shape counts

Exit codes: 0 ok, 2 config error, 3 resource error, 4 corpus error,
5 label/group error. Reports are deterministic byte-for-byte given the
same inputs, config, and seed; floats are serialized with repr() so
values survive a CSV round trip exactly. Timestamps appear only in the
run manifest, never in report files.
"""

from __future__ import annotations

import argparse
import csv
import datetime
import hashlib
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Sequence

from .annotated import load_annotated_corpus
from .errors import (ConfigError, CorpusError, GroupTooSmall, MissingLabel,
                     MissingResource, MissingVariant, ResourceError,
                     TooFewDocuments)
from .evaluation import (DEFAULT_THRESHOLD, GroupComparison, RobustnessResult,
                         combination_search, compare_groups,
                         robustness_split_eval)
from .indices import IndexVector, VARIANT_NAMES, compute_index_vector
from .plaintext import load_label_file, load_raw_corpus
from .runconfig import (RunConfig, load_config_abbreviations, load_resources,
                        load_run_config)
from .scoring import (FAMILIES, GisResult, compute_gis, config_hash,
                      load_norms, save_norms)
from .textmodel import Corpus, corpus_shape_stats

EXIT_CONFIG = 2
EXIT_RESOURCE = 3
EXIT_CORPUS = 4
EXIT_LABELS = 5

_Z_COLUMNS = tuple(f"z_{fam}" for fam in FAMILIES)
_SCORE_HEADER = ("doc_id", "group") + VARIANT_NAMES + _Z_COLUMNS + ("gis",)
_CONFIG_COLUMNS = ("pcref", "smcause_e", "smcause_wn", "pccnc", "wrdimgc")
_COMPARISON_COLUMNS = ("mean_low", "mean_high", "distance", "t", "df", "p",
                       "significant")


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _write_rows(out: str | None, header: Sequence[str], rows):
    """CSV with a fixed line terminator so files are platform-stable."""
    def dump(fh):
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([_fmt(v) for v in row])

    if out is None:
        dump(sys.stdout)
    else:
        with open(out, "w", newline="", encoding="utf-8") as fh:
            dump(fh)


# --- manifest ------------------------------------------------------------------

def _sha256_file(path: Path) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(1 << 20), b""):
            digest.update(chunk)
    return digest.hexdigest()


def _sha256_resource(path: Path) -> str:
    """Digest of a file, or of a directory's sorted per-file digests."""
    if path.is_dir():
        digest = hashlib.sha256()
        for child in sorted(p for p in path.rglob("*") if p.is_file()):
            rel = child.relative_to(path).as_posix()
            digest.update(f"{rel}:{_sha256_file(child)}\n".encode("utf-8"))
        return digest.hexdigest()
    return _sha256_file(path)


def _manifest_target(args, out: str | None) -> str | None:
    explicit = getattr(args, "emit_manifest", None)
    if explicit:
        return explicit
    if out:
        return out + ".manifest.json"
    return None


def _emit_manifest(args, command: str, cfg: RunConfig, corpus_info: dict,
                   out: str | None, extra: dict | None = None) -> None:
    target = _manifest_target(args, out)
    if target is None:
        return
    resources = {}
    for key, value in cfg.resource_paths:
        p = Path(value)
        entry = {"path": value}
        if p.exists():
            entry["sha256"] = _sha256_resource(p)
        resources[key] = entry
    payload = {
        "format": "gistscore-manifest-v1",
        "command": command,
        "config_hash": config_hash(cfg.gis),
        "config": cfg.gis.canonical_dict(),
        "missing_policy": getattr(args, "missing_policy", None) or cfg.missing_policy,
        "resources": resources,
        "corpus": corpus_info,
        "output": out,
        "timestamp_utc": datetime.datetime.now(datetime.timezone.utc).isoformat(),
    }
    if extra:
        payload.update(extra)
    Path(target).write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n",
                            encoding="utf-8")


# --- shared pipeline -------------------------------------------------------------

def _load_corpus(args, cfg: RunConfig, resources) -> Corpus:
    labels = load_label_file(args.labels) if getattr(args, "labels", None) else None
    if getattr(args, "annotated", None):
        sentence_store = resources.sentence_store if resources else None
        token_store = resources.token_store if resources else None
        return load_annotated_corpus(args.annotated, sentence_store, token_store, labels)
    abbrevs = load_config_abbreviations(cfg)
    return load_raw_corpus(args.input, labels, abbrevs)


def _score_vectors(corpus: Corpus, resources, options, jobs: int) -> list[IndexVector]:
    docs = sorted(corpus, key=lambda d: d.id)
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(
                lambda d: compute_index_vector(d, resources, options), docs))
    return [compute_index_vector(d, resources, options) for d in docs]


def _emit_diagnostics(vectors: Sequence[IndexVector]) -> None:
    for vec in vectors:
        for name in VARIANT_NAMES:
            diag = vec.diagnostics.get(name)
            if diag and diag.get("status") != "ok":
                detail = diag.get("detail", "")
                print(f"diag: {vec.doc_id}: {name}: {diag['status']}: {detail}",
                      file=sys.stderr)


def _group_map(corpus: Corpus) -> dict[str, str]:
    return {d.id: d.group_label for d in corpus if d.group_label is not None}


def _pipeline_vectors(args, cfg: RunConfig):
    """Corpus -> (vectors sorted by doc_id, labels, corpus_info)."""
    resources = load_resources(cfg)
    corpus = _load_corpus(args, cfg, resources)
    vectors = _score_vectors(corpus, resources, cfg.compute_options(),
                             getattr(args, "jobs", 1))
    _emit_diagnostics(vectors)
    info = {"source": corpus.provenance.source, "parser": corpus.provenance.parser,
            "n_docs": len(corpus)}
    return vectors, _group_map(corpus), info


def _read_scores(path: str):
    """Rebuild index vectors (and labels, GIS) from a score CSV."""
    vectors: list[IndexVector] = []
    labels: dict[str, str] = {}
    gis: dict[str, float] = {}
    seen: set[str] = set()
    try:
        fh = open(path, newline="", encoding="utf-8")
    except OSError as e:
        raise CorpusError(f"cannot read scores file {path}: {e}") from e
    with fh:
        reader = csv.DictReader(fh)
        if not reader.fieldnames or "doc_id" not in reader.fieldnames:
            raise CorpusError(f"{path}: not a score CSV (no doc_id column)")
        for rownum, row in enumerate(reader, 2):
            doc_id = row.get("doc_id") or ""
            if not doc_id:
                raise CorpusError(f"{path}:{rownum}: empty doc_id")
            if doc_id in seen:
                raise CorpusError(f"{path}:{rownum}: duplicate doc_id {doc_id!r}")
            seen.add(doc_id)
            values = {}
            try:
                for name in VARIANT_NAMES:
                    cell = row.get(name)
                    if cell:
                        values[name] = float(cell)
                cell = row.get("gis")
                if cell:
                    gis[doc_id] = float(cell)
            except ValueError as e:
                raise CorpusError(f"{path}:{rownum}: bad number: {e}") from None
            group = row.get("group")
            if group:
                labels[doc_id] = group
            vectors.append(IndexVector(doc_id=doc_id, values=values))
    if not vectors:
        raise CorpusError(f"{path}: no data rows")
    return vectors, labels, gis


def _eval_inputs(args, cfg: RunConfig):
    """Vectors + labels for evaluate/search/robustness, from either source."""
    if getattr(args, "scores", None):
        vectors, labels, gis = _read_scores(args.scores)
        info = {"source": args.scores, "parser": "score-csv", "n_docs": len(vectors)}
        return vectors, labels, gis, info
    vectors, labels, info = _pipeline_vectors(args, cfg)
    return vectors, labels, None, info


def _override_policy(args, cfg: RunConfig) -> str:
    return getattr(args, "missing_policy", None) or cfg.missing_policy


# --- commands --------------------------------------------------------------------

def cmd_score(args) -> int:
    cfg = load_run_config(args.config)
    policy = _override_policy(args, cfg)
    vectors, labels, info = _pipeline_vectors(args, cfg)

    norms = load_norms(args.norms, expected=cfg.gis) if args.norms else None
    batch = compute_gis(vectors, cfg.gis, norms=norms, missing_policy=policy)
    by_doc = {r.doc_id: r for r in batch.results}

    rows = []
    for vec in vectors:
        result = by_doc.get(vec.doc_id)
        row = [vec.doc_id, labels.get(vec.doc_id, "")]
        row.extend(vec.values.get(name) for name in VARIANT_NAMES)
        if result is None:  # dropped by the missing policy
            row.extend([None] * (len(FAMILIES) + 1))
        else:
            row.extend(result.z[fam] for fam in FAMILIES)
            row.append(result.gis)
        rows.append(row)
    _write_rows(args.out, _SCORE_HEADER, rows)

    if batch.dropped:
        print(f"dropped {len(batch.dropped)} document(s) under missing-policy "
              f"drop: {', '.join(batch.dropped)}", file=sys.stderr)
    if args.save_norms:
        save_norms(args.save_norms, batch.norms, cfg.gis)
    _emit_manifest(args, "score", cfg, info, args.out)
    return 0


def _comparison_row(cmp: GroupComparison) -> list:
    return [cmp.mean_low, cmp.mean_high, cmp.distance, cmp.t, cmp.df, cmp.p,
            cmp.significant]


def _print_comparison(cmp: GroupComparison, low: str, high: str) -> None:
    def num(v):
        return "n/a" if v is None else f"{v:.6g}"
    print(f"low   {low:<20} n={cmp.n_low:<4} mean={num(cmp.mean_low)}")
    print(f"high  {high:<20} n={cmp.n_high:<4} mean={num(cmp.mean_high)}")
    flag = "yes" if cmp.significant else "no"
    if cmp.degenerate:
        flag = "undefined (zero variance)"
    print(f"distance={num(cmp.distance)} t={num(cmp.t)} df={num(cmp.df)} "
          f"p={num(cmp.p)} significant={flag}")


def cmd_evaluate(args) -> int:
    cfg = load_run_config(args.config)
    vectors, labels, gis, info = _eval_inputs(args, cfg)
    if gis is not None:
        results = [GisResult(doc_id=d, z={}, gis=g) for d, g in sorted(gis.items())]
    else:
        policy = _override_policy(args, cfg)
        norms = load_norms(args.norms, expected=cfg.gis) if args.norms else None
        batch = compute_gis(vectors, cfg.gis, norms=norms, missing_policy=policy)
        results = list(batch.results)
    cmp = compare_groups(results, labels, args.low_label, args.high_label,
                         args.threshold, equal_var=not args.welch)
    _print_comparison(cmp, args.low_label, args.high_label)
    if args.out:
        header = ("low_label", "high_label", "n_low", "n_high") + _COMPARISON_COLUMNS + ("degenerate",)
        row = [args.low_label, args.high_label, cmp.n_low, cmp.n_high,
               *_comparison_row(cmp), cmp.degenerate]
        _write_rows(args.out, header, [row])
    _emit_manifest(args, "evaluate", cfg, info, args.out,
                   extra={"threshold": args.threshold})
    return 0


def cmd_search(args) -> int:
    cfg = load_run_config(args.config)
    policy = _override_policy(args, cfg)
    vectors, labels, _, info = _eval_inputs(args, cfg)
    report = combination_search(vectors, labels, args.low_label, args.high_label,
                                args.threshold, policy)
    for failure in report.failures:
        print(f"failed: {failure.config.label()}: {failure.error}", file=sys.stderr)

    print(f"{len(report.comparisons)} combinations compared, "
          f"{len(report.significant_configs())} significant at "
          f"p<={args.threshold:g}, top {min(args.top, len(report.comparisons))}:")
    fmt = "{:>4}  {:<10} {:<12} {:<12} {:<13} {:<15} {:>9} {:>9} {:>9} {:>8} {:>10}"
    print(fmt.format("rank", "pcref", "smcause_e", "smcause_wn", "pccnc",
                     "wrdimgc", "low", "high", "dist", "t", "p"))
    for rank, cmp in enumerate(report.top(args.top), 1):
        c = cmp.config
        star = "*" if cmp.significant else ""
        print(fmt.format(
            rank, c.pcref, c.smcause_e, c.smcause_wn, c.pccnc, c.wrdimgc,
            f"{cmp.mean_low:.3f}", f"{cmp.mean_high:.3f}", f"{cmp.distance:.3f}",
            "n/a" if cmp.t is None else f"{cmp.t:.3f}",
            ("n/a" if cmp.p is None else f"{cmp.p:.4g}") + star))

    if args.out:
        header = ("rank",) + _CONFIG_COLUMNS + ("n_low", "n_high") + _COMPARISON_COLUMNS
        rows = []
        for rank, cmp in enumerate(report.comparisons, 1):
            c = cmp.config
            rows.append([rank, c.pcref, c.smcause_e, c.smcause_wn, c.pccnc,
                         c.wrdimgc, cmp.n_low, cmp.n_high, *_comparison_row(cmp)])
        _write_rows(args.out, header, rows)
    _emit_manifest(args, "search", cfg, info, args.out,
                   extra={"threshold": args.threshold,
                          "n_failures": len(report.failures)})
    return 0


def cmd_robustness(args) -> int:
    cfg = load_run_config(args.config)
    policy = _override_policy(args, cfg)
    vectors, labels, _, info = _eval_inputs(args, cfg)
    try:
        seeds = [int(s) for s in args.seeds.split(",") if s.strip()]
    except ValueError:
        raise ConfigError(f"--seeds must be comma-separated integers, got {args.seeds!r}")
    if not seeds:
        raise ConfigError("--seeds must name at least one seed")

    results: list[RobustnessResult] = []
    for seed in seeds:
        results.append(robustness_split_eval(vectors, labels, args.low_label,
                                             args.high_label, seed,
                                             args.threshold, policy))

    fmt = "{:>10}  {:<58} {:>9} {:>10} {:>9} {:>10}"
    print(fmt.format("seed", "chosen combination", "train_d", "train_p",
                     "test_d", "test_p"))
    for r in results:
        print(fmt.format(
            r.seed, r.chosen_config.label(),
            f"{r.train.distance:.3f}",
            "n/a" if r.train.p is None else f"{r.train.p:.4g}",
            f"{r.test.distance:.3f}",
            "n/a" if r.test.p is None else f"{r.test.p:.4g}"))

    if args.out:
        header = (("seed",) + _CONFIG_COLUMNS
                  + tuple(f"train_{c}" for c in _COMPARISON_COLUMNS)
                  + tuple(f"test_{c}" for c in _COMPARISON_COLUMNS)
                  + ("n_train", "n_test"))
        rows = []
        for r in results:
            c = r.chosen_config
            rows.append([r.seed, c.pcref, c.smcause_e, c.smcause_wn, c.pccnc,
                         c.wrdimgc, *_comparison_row(r.train),
                         *_comparison_row(r.test),
                         len(r.train_ids), len(r.test_ids)])
        _write_rows(args.out, header, rows)
    _emit_manifest(args, "robustness", cfg, info, args.out,
                   extra={"threshold": args.threshold, "seeds": seeds})
    return 0


def cmd_stats(args) -> int:
    cfg = load_run_config(args.config)
    corpus = _load_corpus(args, cfg, None)
    stats = corpus_shape_stats(corpus)
    print(f"documents: {stats.n_docs}")
    print(f"paragraphs: {stats.n_paragraphs}")
    print(f"sentences: {stats.n_sentences}")
    print(f"sentences_per_paragraph: {stats.sentences_per_paragraph_ratio:.4g}")
    if args.out:
        header = ("n_docs", "n_paragraphs", "n_sentences", "sentences_per_paragraph")
        _write_rows(args.out, header,
                    [[stats.n_docs, stats.n_paragraphs, stats.n_sentences,
                      stats.sentences_per_paragraph_ratio]])
    _emit_manifest(args, "stats", cfg,
                   {"source": corpus.provenance.source,
                    "parser": corpus.provenance.parser, "n_docs": len(corpus)},
                   args.out)
    return 0


# --- argument parsing ---------------------------------------------------------

def _add_corpus_args(p: argparse.ArgumentParser, with_scores: bool = False,
                     required: bool = True) -> None:
    group = p.add_mutually_exclusive_group(required=required)
    group.add_argument("--input", metavar="DIR",
                       help="directory of raw .txt documents")
    group.add_argument("--annotated", metavar="FILE",
                       help="annotated corpus records (JSONL or JSON array)")
    if with_scores:
        group.add_argument("--scores", metavar="CSV",
                           help="previously produced score CSV")
    p.add_argument("--labels", metavar="TSV",
                   help="sidecar label file (doc_id<TAB>label)")
    p.add_argument("--config", metavar="YAML", help="run configuration file")
    p.add_argument("--jobs", type=int, default=1, metavar="N",
                   help="parallel scoring workers (default 1)")
    p.add_argument("--missing-policy", choices=("error", "drop", "impute"),
                   dest="missing_policy", default=None,
                   help="override the config's missing-value policy")


def _add_output_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--out", metavar="CSV", help="write the report CSV here")
    p.add_argument("--emit-manifest", metavar="PATH", dest="emit_manifest",
                   help="write the run manifest here "
                        "(default: <out>.manifest.json when --out is given)")


def _add_group_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--low-label", required=True, dest="low_label",
                   help="label of the expected lower-scoring group")
    p.add_argument("--high-label", required=True, dest="high_label",
                   help="label of the expected higher-scoring group")
    p.add_argument("--threshold", type=float, default=DEFAULT_THRESHOLD,
                   help="significance threshold on p (default 0.05)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gistscore",
        description="Gist Inference Score engine: per-document cohesion, "
                    "verb-overlap, concreteness, imageability, and hypernymy "
                    "indices combined into a z-scored GIS, with a "
                    "group-comparison evaluation harness.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("score", help="compute index variants and GIS per document")
    _add_corpus_args(p)
    _add_output_args(p)
    p.add_argument("--norms", metavar="JSON",
                   help="z-score against these reference norms instead of the batch")
    p.add_argument("--save-norms", metavar="JSON", dest="save_norms",
                   help="persist this batch's norms for later reference use")
    p.set_defaults(func=cmd_score)

    p = sub.add_parser("evaluate", help="compare mean GIS of two labeled groups")
    _add_corpus_args(p, with_scores=True)
    _add_group_args(p)
    _add_output_args(p)
    p.add_argument("--norms", metavar="JSON",
                   help="reference norms (pipeline input only)")
    p.add_argument("--welch", action="store_true",
                   help="unequal-variance t-test instead of pooled")
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("search", help="rank all variant combinations by group separation")
    _add_corpus_args(p, with_scores=True)
    _add_group_args(p)
    _add_output_args(p)
    p.add_argument("--top", type=int, default=10, metavar="K",
                   help="rows in the printed table (default 10)")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("robustness",
                       help="train/test split; re-test the train-chosen combination")
    _add_corpus_args(p, with_scores=True)
    _add_group_args(p)
    _add_output_args(p)
    p.add_argument("--seeds", required=True, metavar="S1,S2,...",
                   help="comma-separated integer seeds, one split per seed")
    p.set_defaults(func=cmd_robustness)

    p = sub.add_parser("stats", help="corpus shape counts")
    _add_corpus_args(p)
    _add_output_args(p)
    p.set_defaults(func=cmd_stats)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as e:
        return _fail(EXIT_CONFIG, e)
    except (ResourceError, MissingResource) as e:
        return _fail(EXIT_RESOURCE, e)
    except (MissingLabel, GroupTooSmall) as e:
        return _fail(EXIT_LABELS, e)
    except (CorpusError, TooFewDocuments, MissingVariant) as e:
        return _fail(EXIT_CORPUS, e)


def _fail(code: int, err: Exception) -> int:
    print(f"error: {err}", file=sys.stderr)
    return code
