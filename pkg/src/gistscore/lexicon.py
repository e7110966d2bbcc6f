"""Concreteness / imageability lexicons.

File format: TSV with header ``word<TAB>pos<TAB>concreteness<TAB>imageability``.
The pos column may be empty. Lines starting with # are comments; a
``# range: <min> <max>`` comment overrides the source's default value
range (mrc 100-700, megahr 1-7). Values are kept on their native scale;
z-scoring makes the two sources commensurable later.

Lookup conventions differ by source:

* mrc: match on (word, pos), falling back to a word-only match
* megahr: match on the lowercased surface, falling back to the lemma
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass

from .errors import ParseError
from .textmodel import Token

DEFAULT_RANGES = {"mrc": (100.0, 700.0), "megahr": (1.0, 7.0)}

_RANGE_RE = re.compile(r"#\s*range:\s*(-?\d+(?:\.\d+)?)\s+(-?\d+(?:\.\d+)?)")


@dataclass(frozen=True)
class LexiconEntry:
    concreteness: float
    imageability: float


class PsycholinguisticLexicon:
    def __init__(self, source: str, entries: dict[tuple[str, str | None], LexiconEntry],
                 value_range: tuple[float, float]):
        if source not in ("mrc", "megahr"):
            raise ValueError(f"source must be 'mrc' or 'megahr', got {source!r}")
        lo, hi = value_range
        for (word, pos), entry in entries.items():
            for v in (entry.concreteness, entry.imageability):
                if not (lo <= v <= hi):
                    raise ValueError(
                        f"value {v} for {word!r} outside declared range [{lo}, {hi}]")
        self.source = source
        self.value_range = value_range
        self._by_word_pos = dict(entries)
        self._by_word: dict[str, LexiconEntry] = {}
        for (word, pos), entry in entries.items():
            self._by_word.setdefault(word, entry)

    def __len__(self) -> int:
        return len(self._by_word_pos)

    def lookup(self, token: Token) -> LexiconEntry | None:
        word = token.surface.lower()
        if self.source == "mrc":
            entry = self._by_word_pos.get((word, token.pos))
            if entry is None:
                entry = self._by_word.get(word)
            return entry
        entry = self._by_word.get(word)
        if entry is None:
            entry = self._by_word.get(token.lemma.lower())
        return entry


def lexicon_lookup(lex: PsycholinguisticLexicon, token: Token) -> LexiconEntry | None:
    """Look a token up; None is a coverage miss, never an error."""
    return lex.lookup(token)


def load_lexicon(path: str | os.PathLike, source: str) -> PsycholinguisticLexicon:
    path = str(path)
    value_range = DEFAULT_RANGES.get(source)
    if value_range is None:
        raise ValueError(f"source must be 'mrc' or 'megahr', got {source!r}")
    entries: dict[tuple[str, str | None], LexiconEntry] = {}
    header_seen = False
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.rstrip("\n")
            if not line.strip():
                continue
            if line.lstrip().startswith("#"):
                m = _RANGE_RE.search(line)
                if m:
                    value_range = (float(m.group(1)), float(m.group(2)))
                continue
            if not header_seen:
                cols = line.split("\t")
                if [c.strip().lower() for c in cols] != ["word", "pos", "concreteness", "imageability"]:
                    raise ParseError(
                        "header must be 'word<TAB>pos<TAB>concreteness<TAB>imageability'",
                        path, lineno)
                header_seen = True
                continue
            cols = line.split("\t")
            if len(cols) != 4:
                raise ParseError(f"expected 4 tab-separated columns, got {len(cols)}", path, lineno)
            word = cols[0].strip().lower()
            if not word:
                raise ParseError("empty word", path, lineno)
            pos = cols[1].strip() or None
            try:
                conc = float(cols[2])
                imag = float(cols[3])
            except ValueError:
                raise ParseError("concreteness/imageability must be numeric", path, lineno)
            lo, hi = value_range
            if not (lo <= conc <= hi and lo <= imag <= hi):
                raise ParseError(
                    f"value outside declared range [{lo}, {hi}]", path, lineno)
            entries[(word, pos)] = LexiconEntry(concreteness=conc, imageability=imag)
    if not header_seen:
        raise ParseError("missing header line", path, 1)
    return PsycholinguisticLexicon(source=source, entries=entries, value_range=value_range)
