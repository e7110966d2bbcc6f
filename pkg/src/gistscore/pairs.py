"""Pair enumeration and mean aggregation for similarity-style indices.

Every similarity index comes in four variants, the cross product of
locality (consecutive pairs vs all pairs) and paragraph handling
(respect boundaries vs ignore them), written with canonical postfixes:

    _1   local,  ignoring paragraph boundaries
    _a   global, ignoring paragraph boundaries
    _1p  local,  within each paragraph
    _ap  global, within each paragraph

For paragraph-grouped units [[u0, u1], [u2, u3, u4]]:

    _1  -> (0,1) (1,2) (2,3) (3,4)          n-1 pairs over the flattened sequence
    _a  -> all i<j pairs                     n(n-1)/2 pairs
    _1p -> (0,1) (2,3) (3,4)                 consecutive within paragraphs
    _ap -> (0,1) (2,3) (2,4) (3,4)           all i<j within paragraphs

Emission order is document order (row-major for the global schemes).
Global pairs are unordered and deduplicated (i<j).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence, TypeVar

from .errors import MissingResource, NoPairs

U = TypeVar("U")

POSTFIXES = ("_1", "_a", "_1p", "_ap")


@dataclass(frozen=True)
class VariantScheme:
    locality: str        # "local" | "global"
    paragraph_mode: str  # "ignore" | "respect"

    def __post_init__(self):
        if self.locality not in ("local", "global"):
            raise ValueError(f"locality must be local|global, got {self.locality!r}")
        if self.paragraph_mode not in ("ignore", "respect"):
            raise ValueError(f"paragraph_mode must be ignore|respect, got {self.paragraph_mode!r}")

    @property
    def postfix(self) -> str:
        base = "_1" if self.locality == "local" else "_a"
        return base + ("p" if self.paragraph_mode == "respect" else "")

    @classmethod
    def from_postfix(cls, postfix: str) -> "VariantScheme":
        try:
            return SCHEMES[postfix]
        except KeyError:
            raise ValueError(f"unknown scheme postfix {postfix!r}, expected one of {POSTFIXES}")


SCHEMES = {
    "_1": VariantScheme("local", "ignore"),
    "_a": VariantScheme("global", "ignore"),
    "_1p": VariantScheme("local", "respect"),
    "_ap": VariantScheme("global", "respect"),
}


def enumerate_pairs(groups: Sequence[Sequence[U]], scheme: VariantScheme) -> list[tuple[int, int]]:
    """Enumerate unit pairs as (i, j) indices into the flattened sequence.

    Raises NoPairs when the scheme yields nothing (single unit, or a
    paragraph-level scheme over all-singleton paragraphs).
    """
    sizes = [len(g) for g in groups]
    n = sum(sizes)
    if n == 0:
        raise NoPairs("no units to pair")
    pairs: list[tuple[int, int]] = []
    if scheme.paragraph_mode == "ignore":
        if scheme.locality == "local":
            pairs = [(i, i + 1) for i in range(n - 1)]
        else:
            pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    else:
        offset = 0
        for size in sizes:
            if scheme.locality == "local":
                pairs.extend((offset + i, offset + i + 1) for i in range(size - 1))
            else:
                pairs.extend((offset + i, offset + j)
                             for i in range(size) for j in range(i + 1, size))
            offset += size
    if not pairs:
        raise NoPairs(f"scheme {scheme.postfix} yields no pairs "
                      f"for paragraph sizes {sizes}")
    return pairs


@dataclass(frozen=True)
class PairAggregate:
    """Mean pair score plus skip diagnostics."""
    value: float
    n_pairs: int
    n_scored: int
    n_skipped: int

    @property
    def skip_ratio(self) -> float:
        return self.n_skipped / self.n_pairs if self.n_pairs else 0.0


def aggregate(groups: Sequence[Sequence[U]], scheme: VariantScheme,
              f: Callable[[U, U], float | None]) -> PairAggregate:
    """Arithmetic mean of a pair score over the scheme's enumerated pairs.

    A pair where f returns None (score undefined, e.g. a unit without an
    embedding) is skipped and counted; if every pair skips the result is
    MissingResource rather than a fabricated value.
    """
    pairs = enumerate_pairs(groups, scheme)
    flat = [u for g in groups for u in g]
    scores = []
    skipped = 0
    for i, j in pairs:
        s = f(flat[i], flat[j])
        if s is None:
            skipped += 1
        else:
            scores.append(s)
    if not scores:
        raise MissingResource(
            f"all {len(pairs)} pairs under scheme {scheme.postfix} had undefined scores")
    return PairAggregate(value=sum(scores) / len(scores), n_pairs=len(pairs),
                         n_scored=len(scores), n_skipped=skipped)
