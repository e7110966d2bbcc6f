"""Run configuration: a YAML file tying together variant choices,
weights, policies, and resource paths.

Schema (all sections optional; omitted sections fall back to defaults):

    variants:
      pcref: PCREF_ap          # PCREF_1|PCREF_a|PCREF_1p|PCREF_ap|CoREF
      smcause_e: SMCAUSe_1p
      smcause_wn: SMCAUSwn_a
      pccnc: PCCNC_megahr      # PCCNC_mrc|PCCNC_megahr
      wrdimgc: WRDIMGc_megahr
    weights:                   # per family, finite reals
      PCREF: 1.0
      SMCAUSwn: -1.0
    missing_policy: error      # error|drop|impute
    smcausewn_normalization: sentences   # sentences|pairs
    verb_stoplist: [be, have, do]
    enabled_variants: [PCDC]   # restrict computation; default all
    resources:
      word_vectors: vectors/glove.txt
      sentence_vectors: sidecar/sentences.txt
      token_vectors: sidecar/tokens.txt
      wordnet_dir: wn/
      mrc_lexicon: lexicons/mrc.tsv
      megahr_lexicon: lexicons/megahr.tsv
      patterns: patterns.tsv
      abbreviations: abbrev.txt

Relative resource paths resolve against the config file's directory.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

import yaml

from .connectives import load_patterns
from .errors import ConfigError, MissingResource
from .indices import ComputeOptions, Resources, VARIANT_NAMES
from .lexicon import load_lexicon
from .scoring import DEFAULT_WEIGHTS, FAMILIES, GisConfig
from .segmentation import load_abbreviations
from .vectors import load_vectors
from .wordnetdb import load_wordnet

_RESOURCE_KEYS = (
    "word_vectors", "sentence_vectors", "token_vectors", "wordnet_dir",
    "mrc_lexicon", "megahr_lexicon", "patterns", "abbreviations",
)
_TOP_KEYS = ("variants", "weights", "missing_policy", "smcausewn_normalization",
             "verb_stoplist", "enabled_variants", "resources")
_VARIANT_KEYS = ("pcref", "smcause_e", "smcause_wn", "pccnc", "wrdimgc")


@dataclass(frozen=True)
class RunConfig:
    gis: GisConfig = field(default_factory=GisConfig)
    missing_policy: str = "error"
    wn_normalization: str = "sentences"
    verb_stoplist: frozenset[str] = frozenset()
    enabled_variants: frozenset[str] | None = None
    resource_paths: tuple[tuple[str, str], ...] = ()

    def compute_options(self) -> ComputeOptions:
        return ComputeOptions(enabled=self.enabled_variants,
                              wn_normalization=self.wn_normalization,
                              verb_stoplist=self.verb_stoplist)

    def resource_path(self, key: str) -> str | None:
        return dict(self.resource_paths).get(key)


def _require_mapping(value, name: str) -> dict:
    if not isinstance(value, dict):
        raise ConfigError(f"{name} must be a mapping, got {type(value).__name__}")
    return value


def load_run_config(path: str | Path | None) -> RunConfig:
    """Parse and validate the YAML run config; None means all defaults."""
    if path is None:
        return RunConfig()
    path = Path(path)
    try:
        raw = yaml.safe_load(path.read_text(encoding="utf-8"))
    except OSError as e:
        raise ConfigError(f"cannot read config {path}: {e}") from e
    except yaml.YAMLError as e:
        raise ConfigError(f"{path}: invalid YAML: {e}") from e
    if raw is None:
        raw = {}
    raw = _require_mapping(raw, "config")
    unknown = set(raw) - set(_TOP_KEYS)
    if unknown:
        raise ConfigError(f"{path}: unknown config keys {sorted(unknown)}")

    variants = _require_mapping(raw.get("variants", {}), "variants")
    bad = set(variants) - set(_VARIANT_KEYS)
    if bad:
        raise ConfigError(f"{path}: unknown variant keys {sorted(bad)}")

    weights = dict(DEFAULT_WEIGHTS)
    for fam, value in _require_mapping(raw.get("weights", {}), "weights").items():
        if fam not in FAMILIES:
            raise ConfigError(f"{path}: unknown weight family {fam!r}")
        try:
            weights[fam] = float(value)
        except (TypeError, ValueError):
            raise ConfigError(f"{path}: weight for {fam} is not a number") from None

    defaults = GisConfig()
    gis = GisConfig(
        pcref=variants.get("pcref", defaults.pcref),
        smcause_e=variants.get("smcause_e", defaults.smcause_e),
        smcause_wn=variants.get("smcause_wn", defaults.smcause_wn),
        pccnc=variants.get("pccnc", defaults.pccnc),
        wrdimgc=variants.get("wrdimgc", defaults.wrdimgc),
        weights=tuple(weights.items()),
    )

    policy = raw.get("missing_policy", "error")
    if policy not in ("error", "drop", "impute"):
        raise ConfigError(
            f"{path}: missing_policy must be error|drop|impute, got {policy!r}")

    wn_norm = raw.get("smcausewn_normalization", "sentences")
    if wn_norm not in ("sentences", "pairs"):
        raise ConfigError(
            f"{path}: smcausewn_normalization must be sentences|pairs, got {wn_norm!r}")

    stoplist = raw.get("verb_stoplist", [])
    if not isinstance(stoplist, list) or not all(isinstance(s, str) for s in stoplist):
        raise ConfigError(f"{path}: verb_stoplist must be a list of strings")

    enabled = raw.get("enabled_variants")
    if enabled is not None:
        if not isinstance(enabled, list) or not all(isinstance(s, str) for s in enabled):
            raise ConfigError(f"{path}: enabled_variants must be a list of strings")
        bad = set(enabled) - set(VARIANT_NAMES)
        if bad:
            raise ConfigError(f"{path}: unknown variant names {sorted(bad)}")
        enabled = frozenset(enabled)

    resources = _require_mapping(raw.get("resources", {}), "resources")
    bad = set(resources) - set(_RESOURCE_KEYS)
    if bad:
        raise ConfigError(f"{path}: unknown resource keys {sorted(bad)}")
    base = path.parent
    resolved = []
    for key in _RESOURCE_KEYS:
        if key in resources:
            value = resources[key]
            if not isinstance(value, str):
                raise ConfigError(f"{path}: resource path {key} must be a string")
            resolved.append((key, str((base / value).resolve())))

    return RunConfig(gis=gis, missing_policy=policy, wn_normalization=wn_norm,
                     verb_stoplist=frozenset(s.lower() for s in stoplist),
                     enabled_variants=enabled, resource_paths=tuple(resolved))


def load_resources(cfg: RunConfig) -> Resources:
    """Load every resource the config names; absent files are errors."""
    paths = dict(cfg.resource_paths)

    def existing(key: str, want_dir: bool = False) -> Path | None:
        value = paths.get(key)
        if value is None:
            return None
        p = Path(value)
        if want_dir and not p.is_dir():
            raise MissingResource(f"resource {key}: no such directory: {p}")
        if not want_dir and not p.is_file():
            raise MissingResource(f"resource {key}: no such file: {p}")
        return p

    res = Resources()
    p = existing("word_vectors")
    if p:
        res.word_store = load_vectors(p)
    p = existing("sentence_vectors")
    if p:
        res.sentence_store = load_vectors(p)
    p = existing("token_vectors")
    if p:
        res.token_store = load_vectors(p)
    p = existing("wordnet_dir", want_dir=True)
    if p:
        res.wordnet = load_wordnet(p)
    p = existing("mrc_lexicon")
    if p:
        res.mrc = load_lexicon(p, "mrc")
    p = existing("megahr_lexicon")
    if p:
        res.megahr = load_lexicon(p, "megahr")
    p = existing("patterns")
    if p:
        res.patterns = load_patterns(p)
    return res


def load_config_abbreviations(cfg: RunConfig):
    """Abbreviation set for the sentence splitter, or None for the default."""
    value = cfg.resource_path("abbreviations")
    if value is None:
        return None
    p = Path(value)
    if not p.is_file():
        raise MissingResource(f"resource abbreviations: no such file: {p}")
    return load_abbreviations(p)
