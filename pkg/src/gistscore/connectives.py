"""Causal connective pattern sets.

Pattern file format: one ``<scope><TAB><regex>`` row per line, scope in
{intra, inter}; # starts a comment. A curated default file ships with
the package and is fully replaceable, since cue inventories vary by
source. The scope tag is descriptive metadata: counting runs once over
the whole document text (see indices.pcdc), which keeps nested cues like
"as a result of" / "as a result" from double-firing.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .errors import ParseError, PatternCompileError

SCOPES = ("intra", "inter")


@dataclass(frozen=True)
class ConnectivePattern:
    pattern: str
    scope: str
    regex: re.Pattern


class ConnectivePatternSet:
    def __init__(self, patterns: list[ConnectivePattern]):
        if not patterns:
            raise ValueError("pattern set must be non-empty")
        self.patterns = tuple(patterns)

    def __len__(self) -> int:
        return len(self.patterns)

    def count_matches(self, text: str) -> int:
        """Count non-overlapping matches across a text.

        All patterns are word-boundary anchored and case-insensitive.
        Overlaps resolve longest-match-first (same start: longer span
        wins; spans already covered are skipped), so "as a result of"
        never also fires "as a result".
        """
        candidates = []
        for idx, pat in enumerate(self.patterns):
            for m in pat.regex.finditer(text):
                candidates.append((m.start(), -(m.end() - m.start()), idx, m.end()))
        candidates.sort()
        count = 0
        cursor = 0
        for start, _neg_len, _idx, end in candidates:
            if start >= cursor:
                count += 1
                cursor = end
        return count


def _compile(pattern: str, path: str, lineno: int) -> re.Pattern:
    try:
        return re.compile(rf"\b(?:{pattern})\b", re.IGNORECASE)
    except re.error as e:
        raise PatternCompileError(f"cannot compile pattern {pattern!r}: {e}", path, lineno)


def load_patterns(path: str | os.PathLike) -> ConnectivePatternSet:
    path = str(path)
    patterns = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            parts = line.split("\t", 1)
            if len(parts) != 2 or parts[0] not in SCOPES:
                raise ParseError(
                    "expected '<scope><TAB><regex>' with scope intra|inter", path, lineno)
            scope, pattern = parts[0], parts[1].strip()
            if not pattern:
                raise ParseError("empty pattern", path, lineno)
            patterns.append(ConnectivePattern(pattern=pattern, scope=scope,
                                              regex=_compile(pattern, path, lineno)))
    if not patterns:
        raise ParseError("pattern file defines no patterns", path)
    return ConnectivePatternSet(patterns)


@lru_cache(maxsize=1)
def default_patterns() -> ConnectivePatternSet:
    """The curated causal-cue set shipped with the package."""
    with resources.as_file(
        resources.files("gistscore.data").joinpath("causal_patterns.tsv")
    ) as p:
        return load_patterns(p)
