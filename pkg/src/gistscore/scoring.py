"""Z-normalization and the weighted GIS combination.

A scoring config picks exactly one implementation per index family and
carries the per-family weights. Raw values are z-scored per family
across the scored batch (population standard deviation) and combined:

    GIS = sum over families of weight * z

Defaults: the global paragraph-aware scheme for sentence cohesion, the
paragraph-aware local scheme for verb-embedding overlap, the global
scheme for synset overlap, and the 1-7 lexicon for concreteness and
imageability. All of it is config-overridable; the combination search
in the evaluation layer sweeps every selectable alternative.
"""

from __future__ import annotations

import hashlib
import itertools
import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .errors import ConfigError, MissingVariant, TooFewDocuments
from .indices import IndexVector

FAMILIES = ("PCREF", "PCDC", "SMCAUSe", "SMCAUSwn", "PCCNC", "WRDIMGc", "WRDHYPnv")

DEFAULT_WEIGHTS: dict[str, float] = {
    "PCREF": 1.0,
    "PCDC": 1.0,
    "SMCAUSe": 1.0,
    "SMCAUSwn": -1.0,
    "PCCNC": -1.0,
    "WRDIMGc": -1.0,
    "WRDHYPnv": -1.0,
}

PCREF_CHOICES = ("PCREF_1", "PCREF_a", "PCREF_1p", "PCREF_ap", "CoREF")
SMCAUSE_CHOICES = ("SMCAUSe_1", "SMCAUSe_a", "SMCAUSe_1p", "SMCAUSe_ap")
SMCAUSWN_CHOICES = ("SMCAUSwn_1", "SMCAUSwn_a", "SMCAUSwn_1p", "SMCAUSwn_ap")
PCCNC_CHOICES = ("PCCNC_mrc", "PCCNC_megahr")
WRDIMGC_CHOICES = ("WRDIMGc_mrc", "WRDIMGc_megahr")

_CHOICE_SETS = {
    "pcref": PCREF_CHOICES,
    "smcause_e": SMCAUSE_CHOICES,
    "smcause_wn": SMCAUSWN_CHOICES,
    "pccnc": PCCNC_CHOICES,
    "wrdimgc": WRDIMGC_CHOICES,
}


def _default_weight_items() -> tuple[tuple[str, float], ...]:
    return tuple(DEFAULT_WEIGHTS.items())


@dataclass(frozen=True)
class GisConfig:
    """One variant choice per family plus the weight vector."""
    pcref: str = "PCREF_ap"
    smcause_e: str = "SMCAUSe_1p"
    smcause_wn: str = "SMCAUSwn_a"
    pccnc: str = "PCCNC_megahr"
    wrdimgc: str = "WRDIMGc_megahr"
    weights: tuple[tuple[str, float], ...] = field(default_factory=_default_weight_items)

    def __post_init__(self):
        for fld, choices in _CHOICE_SETS.items():
            value = getattr(self, fld)
            if value not in choices:
                raise ConfigError(f"{fld} must be one of {choices}, got {value!r}")
        wm = dict(self.weights)
        if set(wm) != set(FAMILIES):
            raise ConfigError(
                f"weights must cover exactly the families {FAMILIES}, got {sorted(wm)}")
        for fam, w in wm.items():
            if not math.isfinite(float(w)):
                raise ConfigError(f"weight for {fam} is not finite")

    @property
    def weight_map(self) -> dict[str, float]:
        return {fam: float(w) for fam, w in self.weights}

    def variant_for(self, family: str) -> str:
        table = {
            "PCREF": self.pcref,
            "PCDC": "PCDC",
            "SMCAUSe": self.smcause_e,
            "SMCAUSwn": self.smcause_wn,
            "PCCNC": self.pccnc,
            "WRDIMGc": self.wrdimgc,
            "WRDHYPnv": "WRDHYPnv",
        }
        try:
            return table[family]
        except KeyError:
            raise ConfigError(f"unknown index family {family!r}") from None

    def selected_variants(self) -> dict[str, str]:
        return {fam: self.variant_for(fam) for fam in FAMILIES}

    def label(self) -> str:
        """Compact human-readable tag for tables and reports."""
        return "|".join(
            (self.pcref, self.smcause_e, self.smcause_wn, self.pccnc, self.wrdimgc))

    def canonical_dict(self) -> dict:
        return {
            "variants": {
                "pcref": self.pcref,
                "smcause_e": self.smcause_e,
                "smcause_wn": self.smcause_wn,
                "pccnc": self.pccnc,
                "wrdimgc": self.wrdimgc,
            },
            "weights": {fam: float(w) for fam, w in sorted(self.weights)},
        }


def config_hash(config: GisConfig) -> str:
    blob = json.dumps(config.canonical_dict(), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode("utf-8")).hexdigest()


def config_sort_key(config: GisConfig) -> tuple[int, int, int, int, int]:
    """Position of the config in the canonical enumeration order."""
    return (
        PCREF_CHOICES.index(config.pcref),
        SMCAUSE_CHOICES.index(config.smcause_e),
        SMCAUSWN_CHOICES.index(config.smcause_wn),
        PCCNC_CHOICES.index(config.pccnc),
        WRDIMGC_CHOICES.index(config.wrdimgc),
    )


def enumerate_combinations(
    pcref: Iterable[str] = PCREF_CHOICES,
    smcause_e: Iterable[str] = SMCAUSE_CHOICES,
    smcause_wn: Iterable[str] = SMCAUSWN_CHOICES,
    pccnc: Iterable[str] = PCCNC_CHOICES,
    wrdimgc: Iterable[str] = WRDIMGC_CHOICES,
    weights: Mapping[str, float] | None = None,
) -> list[GisConfig]:
    """Cartesian product of variant choices, in deterministic order.

    The full product is 5 x 4 x 4 x 2 x 2 = 320 configs.
    """
    weight_items = tuple((weights or DEFAULT_WEIGHTS).items())
    return [
        GisConfig(pcref=p, smcause_e=e, smcause_wn=wn, pccnc=c, wrdimgc=i,
                  weights=weight_items)
        for p, e, wn, c, i in itertools.product(
            tuple(pcref), tuple(smcause_e), tuple(smcause_wn),
            tuple(pccnc), tuple(wrdimgc))
    ]


# --- z-scores ----------------------------------------------------------------

@dataclass(frozen=True)
class NormEntry:
    """Batch statistics for one family: mean, population std, batch size."""
    mean: float
    std: float
    n: int
    zero_variance: bool = False


def zscore_batch(values: Sequence[float]) -> tuple[list[float], NormEntry]:
    """Population z-scores; a constant batch maps to all zeros with a flag."""
    vals = [float(v) for v in values]
    if len(vals) < 2:
        raise TooFewDocuments(f"z-scoring needs >= 2 values, got {len(vals)}")
    for v in vals:
        if not math.isfinite(v):
            raise ValueError("z-scoring requires finite values")
    n = len(vals)
    mean = sum(vals) / n
    var = sum((v - mean) ** 2 for v in vals) / n
    std = math.sqrt(var)
    if std == 0.0:
        return [0.0] * n, NormEntry(mean=mean, std=0.0, n=n, zero_variance=True)
    return [(v - mean) / std for v in vals], NormEntry(mean=mean, std=std, n=n)


def apply_norm(value: float, entry: NormEntry) -> float:
    if entry.zero_variance or entry.std == 0.0:
        return 0.0
    return (value - entry.mean) / entry.std


# --- GIS ---------------------------------------------------------------------

@dataclass(frozen=True)
class GisResult:
    doc_id: str
    z: dict[str, float]
    gis: float


@dataclass(frozen=True)
class ScoredBatch:
    results: tuple[GisResult, ...]
    norms: dict[str, NormEntry]
    dropped: tuple[str, ...] = ()

    def by_doc(self) -> dict[str, float]:
        return {r.doc_id: r.gis for r in self.results}


def compute_gis(vectors: Sequence[IndexVector], config: GisConfig,
                norms: Mapping[str, NormEntry] | None = None,
                missing_policy: str = "error") -> ScoredBatch:
    """Z-score the selected variant of every family and combine.

    missing_policy governs documents lacking a selected variant:
      error   raise MissingVariant naming the document and family
      drop    exclude the document from the batch entirely
      impute  substitute the batch mean of the present values

    Passing norms switches from batch statistics to the supplied
    reference statistics (all seven families required).
    """
    if missing_policy not in ("error", "drop", "impute"):
        raise ConfigError(f"missing_policy must be error|drop|impute, got {missing_policy!r}")
    vecs = list(vectors)
    raw: dict[str, list[float | None]] = {
        fam: [v.values.get(config.variant_for(fam)) for v in vecs] for fam in FAMILIES}

    dropped: list[str] = []
    keep = list(range(len(vecs)))
    if missing_policy == "error":
        for fam in FAMILIES:
            for vec, value in zip(vecs, raw[fam]):
                if value is None:
                    raise MissingVariant(vec.doc_id, fam, config.variant_for(fam))
    elif missing_policy == "drop":
        keep = [i for i in keep if all(raw[fam][i] is not None for fam in FAMILIES)]
        kept_set = set(keep)
        dropped = [vecs[i].doc_id for i in range(len(vecs)) if i not in kept_set]
    else:
        for fam in FAMILIES:
            present = [v for v in raw[fam] if v is not None]
            if not present:
                first = vecs[raw[fam].index(None)]
                raise MissingVariant(first.doc_id, fam, config.variant_for(fam))
            fill = sum(present) / len(present)
            raw[fam] = [fill if v is None else v for v in raw[fam]]

    kept_vecs = [vecs[i] for i in keep]
    if len(kept_vecs) < 2:
        raise TooFewDocuments(
            f"scoring needs >= 2 documents after the missing policy, got {len(kept_vecs)}")

    z_by_family: dict[str, list[float]] = {}
    out_norms: dict[str, NormEntry] = {}
    for fam in FAMILIES:
        column = [raw[fam][i] for i in keep]
        if norms is not None:
            try:
                entry = norms[fam]
            except KeyError:
                raise ConfigError(f"reference norms lack family {fam}") from None
            z_by_family[fam] = [apply_norm(v, entry) for v in column]
            out_norms[fam] = entry
        else:
            z_by_family[fam], out_norms[fam] = zscore_batch(column)

    weight_map = config.weight_map
    results = []
    for pos, vec in enumerate(kept_vecs):
        z = {fam: z_by_family[fam][pos] for fam in FAMILIES}
        gis = sum(weight_map[fam] * z[fam] for fam in FAMILIES)
        results.append(GisResult(doc_id=vec.doc_id, z=z, gis=gis))
    return ScoredBatch(results=tuple(results), norms=out_norms, dropped=tuple(dropped))


# --- norms persistence ---------------------------------------------------------

_NORMS_FORMAT = "gistscore-norms-v1"


def save_norms(path: str | Path, norms: Mapping[str, NormEntry],
               config: GisConfig) -> None:
    payload = {
        "format": _NORMS_FORMAT,
        "config_hash": config_hash(config),
        "families": {
            fam: {"mean": e.mean, "std": e.std, "n": e.n,
                  "zero_variance": e.zero_variance}
            for fam, e in norms.items()
        },
    }
    Path(path).write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n",
                          encoding="utf-8")


def load_norms(path: str | Path,
               expected: GisConfig | None = None) -> dict[str, NormEntry]:
    try:
        payload = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as e:
        raise ConfigError(f"cannot read norms file {path}: {e}") from e
    if payload.get("format") != _NORMS_FORMAT:
        raise ConfigError(f"{path}: not a recognized norms file")
    if expected is not None and payload.get("config_hash") != config_hash(expected):
        raise ConfigError(
            f"{path}: norms were computed under a different scoring config")
    families = payload.get("families", {})
    missing = [fam for fam in FAMILIES if fam not in families]
    if missing:
        raise ConfigError(f"{path}: norms lack families {missing}")
    norms = {}
    for fam in FAMILIES:
        e = families[fam]
        norms[fam] = NormEntry(mean=float(e["mean"]), std=float(e["std"]),
                               n=int(e["n"]), zero_variance=bool(e["zero_variance"]))
    return norms
