"""Rule-based sentence segmentation and tokenization for raw plain text.

The segmenter splits on terminal punctuation ([.!?] runs, optionally
followed by closing quotes/brackets) when the next non-space character
starts a new sentence (uppercase letter, digit, or opening quote/bracket),
with an abbreviation exception list shipped as a data file. This is a
deterministic convention validated by a hand-segmented fixture; corpora
annotated upstream bypass it entirely.
"""

from __future__ import annotations

import re
from functools import lru_cache
from importlib import resources

_TOKEN_RE = re.compile(r"\w+(?:['’\-]\w+)*|[^\w\s]")

# terminal punctuation run + optional closing quotes/brackets
_BOUNDARY_RE = re.compile(r"[.!?]+[\"'”’)\]]*")

_OPENERS = "\"'“‘(["


@lru_cache(maxsize=1)
def default_abbreviations() -> frozenset[str]:
    text = resources.files("gistscore.data").joinpath("abbreviations.txt").read_text("utf-8")
    abbrevs = set()
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            abbrevs.add(line.lower())
    return frozenset(abbrevs)


def load_abbreviations(path: str) -> frozenset[str]:
    """Load a user-supplied abbreviation list (same format as the shipped one)."""
    with open(path, encoding="utf-8") as fh:
        return frozenset(
            line.strip().lower()
            for line in fh
            if line.strip() and not line.strip().startswith("#")
        )


def tokenize(text: str) -> list[str]:
    """Split into word tokens and single punctuation tokens.

    Word-internal apostrophes and hyphens stay attached ("don't",
    "state-of-the-art"); every other non-whitespace character becomes its
    own token, so concatenating surfaces reproduces the input minus
    whitespace.
    """
    return _TOKEN_RE.findall(text)


def _word_before(text: str, pos: int) -> str:
    """The whitespace-delimited chunk immediately preceding text[pos]."""
    start = pos
    while start > 0 and not text[start - 1].isspace():
        start -= 1
    return text[start:pos]


_ACRONYM_RE = re.compile(r"(?:\w\.)+\w?")


def _is_abbreviation(word: str, abbrevs: frozenset[str]) -> bool:
    w = word.strip("\"'“‘”’()[]").lower()
    if not w:
        return False
    if w in abbrevs:
        return True
    # single-letter initials: "A." in "A. Turing"
    if len(w) == 1 and w.isalpha():
        return True
    # dotted acronyms: "U.S.", "Ph.D"
    if _ACRONYM_RE.fullmatch(w):
        return True
    return False


def split_sentences(paragraph: str, abbrevs: frozenset[str] | None = None) -> list[str]:
    """Split one paragraph into sentences.

    Returns trimmed sentence strings; a paragraph without terminal
    punctuation comes back as a single sentence.
    """
    if abbrevs is None:
        abbrevs = default_abbreviations()
    text = paragraph.strip()
    if not text:
        return []

    sentences = []
    start = 0
    for m in _BOUNDARY_RE.finditer(text):
        end = m.end()
        if end >= len(text):
            break  # trailing punctuation closes the last sentence below
        # require whitespace after the boundary
        if not text[end].isspace():
            continue
        nxt = end
        while nxt < len(text) and text[nxt].isspace():
            nxt += 1
        if nxt >= len(text):
            break
        starter = text[nxt]
        if not (starter.isupper() or starter.isdigit() or starter in _OPENERS):
            continue
        terminal = m.group(0).rstrip("\"'”’)]")
        if terminal == ".":
            # a lone period: suppress the split after known abbreviations
            word = _word_before(text, m.start())
            if _is_abbreviation(word, abbrevs):
                continue
        chunk = text[start:end].strip()
        if chunk:
            sentences.append(chunk)
        start = nxt
    tail = text[start:].strip()
    if tail:
        sentences.append(tail)
    return sentences


def split_paragraphs(raw: str) -> list[str]:
    """Split raw text into paragraph blocks on runs of one or more newlines."""
    return [block for block in (b.strip() for b in re.split(r"\n+", raw.strip())) if block]
