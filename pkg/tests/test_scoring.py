"""Scoring-layer tests: z-normalization, config space, GIS combination.

The GIS oracle here is a second, independent route: numpy statistics and
an explicit weighted sum, never the library's own helpers.
"""

import itertools
import math

import numpy as np
import pytest

from gistscore.errors import ConfigError, MissingVariant, TooFewDocuments
from gistscore.indices import IndexVector
from gistscore.scoring import (DEFAULT_WEIGHTS, FAMILIES, GisConfig,
                               NormEntry, PCCNC_CHOICES, PCREF_CHOICES,
                               SMCAUSE_CHOICES, SMCAUSWN_CHOICES,
                               WRDIMGC_CHOICES, apply_norm, compute_gis,
                               config_hash, config_sort_key,
                               enumerate_combinations, load_norms, save_norms,
                               zscore_batch)

# ------------------------------------------------------------------ z-scores


def numpy_z(values):
    arr = np.asarray(values, dtype=float)
    std = arr.std()  # population convention
    return np.zeros_like(arr) if std == 0 else (arr - arr.mean()) / std


def test_zscore_known_batch():
    z, entry = zscore_batch([1.0, 2.0, 3.0, 4.0])
    assert z == pytest.approx(
        [-1.3416407865, -0.4472135955, 0.4472135955, 1.3416407865], abs=1e-9)
    assert entry.mean == 2.5
    assert entry.std == pytest.approx(math.sqrt(1.25), abs=1e-15)
    assert entry.n == 4 and not entry.zero_variance


def test_zscore_matches_numpy(rng):
    for n in (2, 3, 7, 50, 400):
        values = list(rng.normal(3.0, 9.0, size=n))
        z, entry = zscore_batch(values)
        assert np.allclose(z, numpy_z(values), atol=1e-12)
        assert entry.mean == pytest.approx(np.mean(values), abs=1e-12)
        assert entry.std == pytest.approx(np.std(values), abs=1e-12)


def test_zscore_output_is_standardized(rng):
    values = list(rng.uniform(-5, 5, size=97))
    z, _ = zscore_batch(values)
    assert np.mean(z) == pytest.approx(0.0, abs=1e-12)
    assert np.std(z) == pytest.approx(1.0, abs=1e-12)


def test_zscore_constant_batch_flags_zero_variance():
    z, entry = zscore_batch([2.0, 2.0, 2.0])
    assert z == [0.0, 0.0, 0.0]
    assert entry.zero_variance and entry.std == 0.0 and entry.mean == 2.0


def test_zscore_needs_two_values():
    with pytest.raises(TooFewDocuments):
        zscore_batch([1.0])
    with pytest.raises(TooFewDocuments):
        zscore_batch([])


def test_zscore_rejects_non_finite():
    with pytest.raises(ValueError):
        zscore_batch([1.0, float("nan")])
    with pytest.raises(ValueError):
        zscore_batch([1.0, float("inf")])


def test_apply_norm_round_trip(rng):
    values = list(rng.normal(size=20))
    z, entry = zscore_batch(values)
    assert [apply_norm(v, entry) for v in values] == pytest.approx(z, abs=1e-12)
    assert apply_norm(123.0, NormEntry(mean=0.0, std=0.0, n=5, zero_variance=True)) == 0.0


# ------------------------------------------------------------------- configs


def test_default_config_choices():
    cfg = GisConfig()
    assert cfg.selected_variants() == {
        "PCREF": "PCREF_ap", "PCDC": "PCDC", "SMCAUSe": "SMCAUSe_1p",
        "SMCAUSwn": "SMCAUSwn_a", "PCCNC": "PCCNC_megahr",
        "WRDIMGc": "WRDIMGc_megahr", "WRDHYPnv": "WRDHYPnv"}
    assert cfg.weight_map == DEFAULT_WEIGHTS


def test_default_weight_signs():
    assert DEFAULT_WEIGHTS == {
        "PCREF": 1.0, "PCDC": 1.0, "SMCAUSe": 1.0,
        "SMCAUSwn": -1.0, "PCCNC": -1.0, "WRDIMGc": -1.0, "WRDHYPnv": -1.0}


@pytest.mark.parametrize("field,bad", [
    ("pcref", "PCREF_x"),
    ("pcref", "SMCAUSe_1"),
    ("smcause_e", "SMCAUSwn_1"),
    ("smcause_wn", ""),
    ("pccnc", "PCCNC"),
    ("wrdimgc", "WRDIMGc"),
])
def test_config_rejects_bad_choice(field, bad):
    with pytest.raises(ConfigError):
        GisConfig(**{field: bad})


def test_config_rejects_bad_weights():
    with pytest.raises(ConfigError, match="families"):
        GisConfig(weights=(("PCREF", 1.0),))
    extra = tuple(DEFAULT_WEIGHTS.items()) + (("EXTRA", 1.0),)
    with pytest.raises(ConfigError, match="families"):
        GisConfig(weights=extra)
    nan = tuple((f, float("nan") if f == "PCDC" else w)
                for f, w in DEFAULT_WEIGHTS.items())
    with pytest.raises(ConfigError, match="finite"):
        GisConfig(weights=nan)


def test_config_label_and_unknown_family():
    cfg = GisConfig()
    assert cfg.label() == "PCREF_ap|SMCAUSe_1p|SMCAUSwn_a|PCCNC_megahr|WRDIMGc_megahr"
    with pytest.raises(ConfigError):
        cfg.variant_for("NOPE")


def test_config_hash_is_stable_and_discriminating():
    a, b = GisConfig(), GisConfig()
    assert config_hash(a) == config_hash(b)
    assert len(config_hash(a)) == 64
    c = GisConfig(pcref="CoREF")
    assert config_hash(a) != config_hash(c)
    # weight changes also change the hash
    w = {**DEFAULT_WEIGHTS, "PCDC": 2.0}
    d = GisConfig(weights=tuple(w.items()))
    assert config_hash(a) != config_hash(d)
    # weight ordering does not: the canonical form sorts
    e = GisConfig(weights=tuple(reversed(tuple(DEFAULT_WEIGHTS.items()))))
    assert config_hash(a) == config_hash(e)


def test_enumerate_320_unique_ordered():
    combos = enumerate_combinations()
    assert len(combos) == 320
    assert len({config_hash(c) for c in combos}) == 320
    # order is the plain cartesian product of the published choice tuples
    want = [
        (p, e, wn, c, i)
        for p, e, wn, c, i in itertools.product(
            PCREF_CHOICES, SMCAUSE_CHOICES, SMCAUSWN_CHOICES,
            PCCNC_CHOICES, WRDIMGC_CHOICES)]
    got = [(c.pcref, c.smcause_e, c.smcause_wn, c.pccnc, c.wrdimgc) for c in combos]
    assert got == want
    assert [config_sort_key(c) for c in combos] == sorted(
        config_sort_key(c) for c in combos)


def test_enumerate_restriction():
    combos = enumerate_combinations(pcref=("CoREF",))
    assert len(combos) == 64
    assert all(c.pcref == "CoREF" for c in combos)
    one = enumerate_combinations(pcref=("PCREF_1",), smcause_e=("SMCAUSe_a",),
                                 smcause_wn=("SMCAUSwn_1",), pccnc=("PCCNC_mrc",),
                                 wrdimgc=("WRDIMGc_mrc",))
    assert len(one) == 1


def test_enumerate_custom_weights():
    w = {**DEFAULT_WEIGHTS, "WRDHYPnv": -2.5}
    combos = enumerate_combinations(weights=w)
    assert all(c.weight_map["WRDHYPnv"] == -2.5 for c in combos)


# ----------------------------------------------------------------------- GIS

RAW_TABLE = {
    # doc_id -> per-family raw values (for the default variant choices)
    "d1": {"PCREF": 0.10, "PCDC": 0.00, "SMCAUSe": 0.50, "SMCAUSwn": 1.20,
           "PCCNC": 4.10, "WRDIMGc": 4.00, "WRDHYPnv": 2.00},
    "d2": {"PCREF": 0.30, "PCDC": 0.50, "SMCAUSe": 0.20, "SMCAUSwn": 0.40,
           "PCCNC": 3.20, "WRDIMGc": 3.10, "WRDHYPnv": 1.50},
    "d3": {"PCREF": 0.80, "PCDC": 1.00, "SMCAUSe": 0.90, "SMCAUSwn": 0.10,
           "PCCNC": 2.50, "WRDIMGc": 2.40, "WRDHYPnv": 1.10},
    "d4": {"PCREF": 0.60, "PCDC": 0.25, "SMCAUSe": 0.70, "SMCAUSwn": 0.90,
           "PCCNC": 5.00, "WRDIMGc": 4.90, "WRDHYPnv": 2.60},
}


def vectors_from_table(table, config=None, skip=()):
    cfg = config or GisConfig()
    out = []
    for doc_id, fams in table.items():
        values = {cfg.variant_for(fam): val for fam, val in fams.items()
                  if (doc_id, fam) not in skip}
        out.append(IndexVector(doc_id=doc_id, values=values))
    return out


def oracle_gis(table, weights):
    ids = list(table)
    z = {fam: numpy_z([table[d][fam] for d in ids]) for fam in FAMILIES}
    return {d: sum(weights[fam] * z[fam][i] for fam in FAMILIES)
            for i, d in enumerate(ids)}


def test_gis_matches_hand_oracle():
    batch = compute_gis(vectors_from_table(RAW_TABLE), GisConfig())
    want = oracle_gis(RAW_TABLE, DEFAULT_WEIGHTS)
    got = batch.by_doc()
    assert set(got) == set(want)
    for doc_id in want:
        assert got[doc_id] == pytest.approx(want[doc_id], abs=1e-9)
    # z-components exposed per document
    for result in batch.results:
        assert set(result.z) == set(FAMILIES)
        assert result.gis == pytest.approx(
            sum(DEFAULT_WEIGHTS[f] * result.z[f] for f in FAMILIES), abs=1e-12)


def test_gis_nondefault_config_reads_other_variants():
    cfg = GisConfig(pcref="PCREF_1", smcause_wn="SMCAUSwn_1p", pccnc="PCCNC_mrc",
                    wrdimgc="WRDIMGc_mrc")
    batch = compute_gis(vectors_from_table(RAW_TABLE, cfg), cfg)
    want = oracle_gis(RAW_TABLE, DEFAULT_WEIGHTS)  # same raw table, same weights
    for result in batch.results:
        assert result.gis == pytest.approx(want[result.doc_id], abs=1e-9)


def test_gis_weight_negation_shifts_by_twice_the_component():
    base = compute_gis(vectors_from_table(RAW_TABLE), GisConfig())
    flipped_w = {**DEFAULT_WEIGHTS, "PCDC": -DEFAULT_WEIGHTS["PCDC"]}
    flipped = compute_gis(vectors_from_table(RAW_TABLE),
                          GisConfig(weights=tuple(flipped_w.items())))
    for a, b in zip(base.results, flipped.results):
        assert b.gis == pytest.approx(
            a.gis - 2 * DEFAULT_WEIGHTS["PCDC"] * a.z["PCDC"], abs=1e-12)


def test_gis_invariant_to_affine_family_rescale():
    # z-scores kill any a*x + b (a > 0) transform of one family's raws
    scaled = {d: dict(f) for d, f in RAW_TABLE.items()}
    for d in scaled:
        scaled[d]["PCCNC"] = 37.0 * scaled[d]["PCCNC"] + 11.0
    a = compute_gis(vectors_from_table(RAW_TABLE), GisConfig())
    b = compute_gis(vectors_from_table(scaled), GisConfig())
    for ra, rb in zip(a.results, b.results):
        assert rb.gis == pytest.approx(ra.gis, abs=1e-12)


def test_gis_zero_variance_family_contributes_nothing():
    table = {d: dict(f) for d, f in RAW_TABLE.items()}
    for d in table:
        table[d]["PCDC"] = 0.4
    batch = compute_gis(vectors_from_table(table), GisConfig())
    assert batch.norms["PCDC"].zero_variance
    for result in batch.results:
        assert result.z["PCDC"] == 0.0


def test_gis_too_few_documents():
    vecs = vectors_from_table({"d1": RAW_TABLE["d1"]})
    with pytest.raises(TooFewDocuments):
        compute_gis(vecs, GisConfig())


def test_gis_rejects_unknown_policy():
    with pytest.raises(ConfigError):
        compute_gis(vectors_from_table(RAW_TABLE), GisConfig(), missing_policy="skip")


# -------------------------------------------------------------- missing data


def test_missing_policy_error():
    vecs = vectors_from_table(RAW_TABLE, skip={("d2", "SMCAUSwn")})
    with pytest.raises(MissingVariant) as exc_info:
        compute_gis(vecs, GisConfig())
    assert exc_info.value.doc_id == "d2"
    assert exc_info.value.family == "SMCAUSwn"
    assert exc_info.value.variant == "SMCAUSwn_a"


def test_missing_policy_drop():
    vecs = vectors_from_table(RAW_TABLE, skip={("d2", "SMCAUSwn")})
    batch = compute_gis(vecs, GisConfig(), missing_policy="drop")
    assert batch.dropped == ("d2",)
    assert [r.doc_id for r in batch.results] == ["d1", "d3", "d4"]
    # equivalent to never having had the document
    remainder = {d: f for d, f in RAW_TABLE.items() if d != "d2"}
    want = compute_gis(vectors_from_table(remainder), GisConfig())
    for got, ref in zip(batch.results, want.results):
        assert got.gis == pytest.approx(ref.gis, abs=1e-12)


def test_missing_policy_drop_can_leave_too_few():
    skip = {("d1", "PCREF"), ("d2", "PCDC"), ("d3", "SMCAUSe")}
    vecs = vectors_from_table(RAW_TABLE, skip=skip)
    with pytest.raises(TooFewDocuments):
        compute_gis(vecs, GisConfig(), missing_policy="drop")


def test_missing_policy_impute_gives_mean_z_zero():
    vecs = vectors_from_table(RAW_TABLE, skip={("d2", "SMCAUSwn")})
    batch = compute_gis(vecs, GisConfig(), missing_policy="impute")
    assert batch.dropped == ()
    by_id = {r.doc_id: r for r in batch.results}
    # the fill value IS the batch mean, so the imputed document z-scores to 0
    assert by_id["d2"].z["SMCAUSwn"] == pytest.approx(0.0, abs=1e-12)
    # the other documents see the same mean but a smaller std than without d2
    present = [RAW_TABLE[d]["SMCAUSwn"] for d in ("d1", "d3", "d4")]
    fill = sum(present) / len(present)
    want_z = numpy_z(present + [fill])
    for i, d in enumerate(("d1", "d3", "d4")):
        assert by_id[d].z["SMCAUSwn"] == pytest.approx(want_z[i], abs=1e-12)


def test_missing_policy_impute_needs_any_value():
    skip = {(d, "WRDHYPnv") for d in RAW_TABLE}
    vecs = vectors_from_table(RAW_TABLE, skip=skip)
    with pytest.raises(MissingVariant):
        compute_gis(vecs, GisConfig(), missing_policy="impute")


# ------------------------------------------------------------ reference norms


def test_reference_norms_reproduce_training_scores(tmp_path):
    cfg = GisConfig()
    train = compute_gis(vectors_from_table(RAW_TABLE), cfg)
    path = tmp_path / "norms.json"
    save_norms(path, train.norms, cfg)
    loaded = load_norms(path, expected=cfg)
    rescored = compute_gis(vectors_from_table(RAW_TABLE), cfg, norms=loaded)
    for a, b in zip(train.results, rescored.results):
        assert b.gis == pytest.approx(a.gis, abs=1e-12)
        assert b.z == pytest.approx(a.z, abs=1e-12)


def test_reference_norms_score_new_documents():
    cfg = GisConfig()
    train = compute_gis(vectors_from_table(RAW_TABLE), cfg)
    new_table = {
        "n1": {f: v + 0.05 for f, v in RAW_TABLE["d1"].items()},
        "n2": {f: v - 0.05 for f, v in RAW_TABLE["d3"].items()},
    }
    batch = compute_gis(vectors_from_table(new_table), cfg, norms=train.norms)
    for result in batch.results:
        raw = new_table[result.doc_id]
        want = sum(
            DEFAULT_WEIGHTS[f]
            * (raw[f] - train.norms[f].mean) / train.norms[f].std
            for f in FAMILIES)
        assert result.gis == pytest.approx(want, abs=1e-12)


def test_reference_norms_must_cover_all_families():
    cfg = GisConfig()
    train = compute_gis(vectors_from_table(RAW_TABLE), cfg)
    partial = {f: e for f, e in train.norms.items() if f != "WRDHYPnv"}
    with pytest.raises(ConfigError, match="WRDHYPnv"):
        compute_gis(vectors_from_table(RAW_TABLE), cfg, norms=partial)


def test_norms_file_round_trip_and_config_guard(tmp_path):
    cfg = GisConfig()
    batch = compute_gis(vectors_from_table(RAW_TABLE), cfg)
    path = tmp_path / "norms.json"
    save_norms(path, batch.norms, cfg)
    loaded = load_norms(path)
    assert loaded == batch.norms
    with pytest.raises(ConfigError, match="different scoring config"):
        load_norms(path, expected=GisConfig(pcref="CoREF"))


def test_norms_file_rejects_foreign_json(tmp_path):
    path = tmp_path / "other.json"
    path.write_text('{"format": "something-else"}', encoding="utf-8")
    with pytest.raises(ConfigError, match="not a recognized"):
        load_norms(path)
    broken = tmp_path / "broken.json"
    broken.write_text("{", encoding="utf-8")
    with pytest.raises(ConfigError):
        load_norms(broken)
