"""Group-comparison harness over GIS scores.

Pieces: a low-vs-high group comparison backed by the two-sample t-test,
a full sweep over every variant combination ranked by group distance,
the cross-corpus intersection of significant combinations, and a seeded
train/test robustness check.

Randomness is confined to the train/test split and flows through a
SplitMix64 generator driving a Fisher-Yates shuffle over sorted doc
ids, so a seed reproduces the same split on any platform or language.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import GistScoreError, GroupTooSmall, MissingLabel
from .indices import IndexVector
from .scoring import (GisConfig, GisResult, ScoredBatch, compute_gis,
                      config_sort_key, enumerate_combinations)
from .ttest import TTestResult, t_test_two_sample

DEFAULT_THRESHOLD = 0.05


@dataclass(frozen=True)
class GroupComparison:
    """Means, distance, and t-test outputs for one low/high comparison."""
    mean_low: float
    mean_high: float
    distance: float  # mean_high - mean_low
    t: float | None
    p: float | None
    df: float
    n_low: int
    n_high: int
    threshold: float
    significant: bool
    degenerate: bool = False
    config: GisConfig | None = None

    def with_config(self, config: GisConfig) -> "GroupComparison":
        return GroupComparison(
            mean_low=self.mean_low, mean_high=self.mean_high, distance=self.distance,
            t=self.t, p=self.p, df=self.df, n_low=self.n_low, n_high=self.n_high,
            threshold=self.threshold, significant=self.significant,
            degenerate=self.degenerate, config=config)


def split_by_label(results: Sequence[GisResult], labels: Mapping[str, str],
                   label: str) -> list[float]:
    return [r.gis for r in results if labels.get(r.doc_id) == label]


def compare_groups(results: Sequence[GisResult], labels: Mapping[str, str],
                   low_label: str, high_label: str,
                   threshold: float = DEFAULT_THRESHOLD,
                   equal_var: bool = True) -> GroupComparison:
    """Compare mean GIS of the high group against the low group.

    The t statistic and the distance share a sign convention: both are
    positive when the high group scores higher. Zero pooled variance
    yields a degenerate result (t and p None, not significant).
    """
    low = split_by_label(results, labels, low_label)
    high = split_by_label(results, labels, high_label)
    for name, values in ((low_label, low), (high_label, high)):
        if not values:
            raise MissingLabel(f"no scored document carries label {name!r}")
        if len(values) < 2:
            raise GroupTooSmall(f"label {name!r} has {len(values)} document(s), needs >= 2")
    test: TTestResult = t_test_two_sample(high, low, equal_var=equal_var)
    mean_low = sum(low) / len(low)
    mean_high = sum(high) / len(high)
    significant = test.p is not None and test.p <= threshold
    return GroupComparison(
        mean_low=mean_low, mean_high=mean_high, distance=mean_high - mean_low,
        t=test.t, p=test.p, df=test.df, n_low=len(low), n_high=len(high),
        threshold=threshold, significant=significant, degenerate=test.degenerate)


@dataclass(frozen=True)
class SearchFailure:
    config: GisConfig
    error: str


@dataclass(frozen=True)
class SearchReport:
    """All per-config comparisons, ranked by distance (descending).

    Ties break on the t statistic, then on canonical config order, so
    the ranking is fully deterministic.
    """
    comparisons: tuple[GroupComparison, ...]
    failures: tuple[SearchFailure, ...]
    threshold: float
    low_label: str
    high_label: str

    def top(self, k: int = 10) -> tuple[GroupComparison, ...]:
        return self.comparisons[:k]

    def significant_configs(self) -> set[GisConfig]:
        return {c.config for c in self.comparisons if c.significant}

    def best(self) -> GroupComparison:
        if not self.comparisons:
            raise GistScoreError("search produced no successful comparison")
        return self.comparisons[0]


def _rank_key(comparison: GroupComparison):
    t = comparison.t if comparison.t is not None else -math.inf
    return (-comparison.distance, -t, config_sort_key(comparison.config))


def combination_search(vectors: Sequence[IndexVector], labels: Mapping[str, str],
                       low_label: str, high_label: str,
                       threshold: float = DEFAULT_THRESHOLD,
                       missing_policy: str = "error",
                       configs: Sequence[GisConfig] | None = None) -> SearchReport:
    """Score the corpus under every config and rank the group separations.

    Per-config errors (a selected variant missing everywhere, a group
    collapsing after drops) are recorded as failures, not raised, so one
    bad combination cannot sink the sweep.
    """
    if configs is None:
        configs = enumerate_combinations()
    comparisons: list[GroupComparison] = []
    failures: list[SearchFailure] = []
    for config in configs:
        try:
            batch = compute_gis(vectors, config, missing_policy=missing_policy)
            comparison = compare_groups(batch.results, labels, low_label,
                                        high_label, threshold)
        except GistScoreError as e:
            failures.append(SearchFailure(config=config, error=str(e)))
            continue
        comparisons.append(comparison.with_config(config))
    comparisons.sort(key=_rank_key)
    return SearchReport(comparisons=tuple(comparisons), failures=tuple(failures),
                        threshold=threshold, low_label=low_label, high_label=high_label)


def significant_intersection(reports: Iterable[SearchReport]) -> set[GisConfig]:
    """Configs significant in every report."""
    reports = list(reports)
    if len(reports) < 2:
        raise ValueError("intersection needs at least two reports")
    result = reports[0].significant_configs()
    for report in reports[1:]:
        result &= report.significant_configs()
    return result


# --- seeded train/test split ---------------------------------------------------

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """Tiny portable PRNG; fixed integer recurrence, no platform drift."""

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def next_below(self, bound: int) -> int:
        """Uniform draw in [0, bound) by rejection (no modulo bias)."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            draw = self.next_u64()
            if draw < limit:
                return draw % bound

    def shuffle(self, items: list) -> None:
        """In-place Fisher-Yates."""
        for i in range(len(items) - 1, 0, -1):
            j = self.next_below(i + 1)
            items[i], items[j] = items[j], items[i]


def stratified_split(doc_ids: Iterable[str], labels: Mapping[str, str],
                     group_labels: Sequence[str], seed: int
                     ) -> tuple[list[str], list[str]]:
    """Label-stratified 50/50 split, train taking the ceil on odd counts.

    Documents are keyed by sorted id before shuffling, so the split
    depends only on (ids, labels, seed).
    """
    rng = SplitMix64(seed)
    train: list[str] = []
    test: list[str] = []
    for label in sorted(set(group_labels)):
        ids = sorted(d for d in doc_ids if labels.get(d) == label)
        if len(ids) < 2:
            raise GroupTooSmall(f"label {label!r} has {len(ids)} document(s), needs >= 2")
        rng.shuffle(ids)
        cut = (len(ids) + 1) // 2
        train.extend(ids[:cut])
        test.extend(ids[cut:])
    return sorted(train), sorted(test)


@dataclass(frozen=True)
class RobustnessResult:
    seed: int
    chosen_config: GisConfig
    train: GroupComparison
    test: GroupComparison
    train_ids: tuple[str, ...]
    test_ids: tuple[str, ...]


def robustness_split_eval(vectors: Sequence[IndexVector], labels: Mapping[str, str],
                          low_label: str, high_label: str, seed: int,
                          threshold: float = DEFAULT_THRESHOLD,
                          missing_policy: str = "error") -> RobustnessResult:
    """Split, search on train, re-evaluate the winning config on test.

    Both halves are z-scored within themselves (GIS is batch-relative),
    so the test side is a genuinely independent read of the chosen
    combination. Each comparison group needs >= 2 documents on both
    sides of the split, i.e. >= 4 documents per label overall.
    """
    by_id = {v.doc_id: v for v in vectors}
    train_ids, test_ids = stratified_split(by_id, labels, (low_label, high_label), seed)
    train_vecs = [by_id[d] for d in train_ids]
    test_vecs = [by_id[d] for d in test_ids]

    report = combination_search(train_vecs, labels, low_label, high_label,
                                threshold, missing_policy)
    best = report.best()
    chosen = best.config

    test_batch: ScoredBatch = compute_gis(test_vecs, chosen,
                                          missing_policy=missing_policy)
    test_cmp = compare_groups(test_batch.results, labels, low_label, high_label,
                              threshold).with_config(chosen)
    return RobustnessResult(seed=seed, chosen_config=chosen, train=best,
                            test=test_cmp, train_ids=tuple(train_ids),
                            test_ids=tuple(test_ids))
