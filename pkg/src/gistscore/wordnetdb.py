"""Parser and query layer for WordNet-style database directories.

Accepted layout: a directory holding `data.<pos>` / `index.<pos>` files
for pos in {noun, verb, adj, adv}. The exact line grammar accepted:

data.<pos> (one synset per line; header lines starting with two spaces
are skipped)::

    offset lex_filenum ss_type w_cnt (word lex_id){w_cnt} p_cnt
        (ptr_symbol offset pos source_target){p_cnt} [frame data] | gloss

* offset: decimal digits; ss_type: one of n v a s r
* w_cnt is hexadecimal, p_cnt decimal, source_target 4 hex digits
* pointer symbols `@` (hypernym) and `@i` (instance hypernym) become
  hypernym edges; all other pointers are ignored

index.<pos> (one lemma per line)::

    lemma pos synset_cnt p_cnt (ptr_symbol){p_cnt} sense_cnt
        tagsense_cnt (offset){synset_cnt}

Synset ids are `<offset>-<ss_type>`. The hypernym graph must be acyclic
(CycleError otherwise); in a finite acyclic graph roots -- synsets with
no hypernyms -- always exist.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass
from pathlib import Path

from .errors import CycleError, ParseError, UnknownSynset

POS_FILES = {"noun": "n", "verb": "v", "adj": "a", "adv": "r"}
_COARSE = {"n": "NOUN", "v": "VERB", "a": "ADJ", "s": "ADJ", "r": "ADV"}


@dataclass(frozen=True)
class Synset:
    id: str
    pos: str  # coarse tag
    lemmas: tuple[str, ...]


class WordNetDb:
    """Immutable synset store with a lemma index and hypernym graph."""

    def __init__(self, synsets: dict[str, Synset],
                 lemma_index: dict[tuple[str, str], tuple[str, ...]],
                 hypernyms: dict[str, tuple[str, ...]]):
        self.synsets = synsets
        self.lemma_index = lemma_index
        self.hypernyms = hypernyms
        self._depth_cache: dict[str, int] = {}
        self._check_acyclic()

    def _check_acyclic(self):
        color: dict[str, int] = {}  # 1 in-progress, 2 done
        for start in self.synsets:
            if color.get(start):
                continue
            stack = [(start, iter(self.hypernyms.get(start, ())))]
            color[start] = 1
            while stack:
                node, parents = stack[-1]
                advanced = False
                for parent in parents:
                    state = color.get(parent, 0)
                    if state == 1:
                        raise CycleError(parent)
                    if state == 0:
                        color[parent] = 1
                        stack.append((parent, iter(self.hypernyms.get(parent, ()))))
                        advanced = True
                        break
                if not advanced:
                    color[node] = 2
                    stack.pop()

    def synsets_for(self, lemma: str, pos: str) -> tuple[str, ...]:
        """All synset ids for a (lemma, coarse pos) pair; empty when unknown."""
        return self.lemma_index.get((normalize_lemma(lemma), pos), ())

    def roots(self, pos: str | None = None) -> list[str]:
        return [sid for sid, syn in self.synsets.items()
                if not self.hypernyms.get(sid) and (pos is None or syn.pos == pos)]


def normalize_lemma(lemma: str) -> str:
    return lemma.strip().lower().replace(" ", "_")


def hypernym_path_length(db: WordNetDb, synset_id: str) -> int:
    """Edge count of the shortest hypernym chain from a synset to any root."""
    if synset_id not in db.synsets:
        raise UnknownSynset(f"unknown synset id {synset_id!r}")
    cached = db._depth_cache.get(synset_id)
    if cached is not None:
        return cached
    # BFS upward; acyclicity is guaranteed at load time
    seen = {synset_id}
    queue = deque([(synset_id, 0)])
    while queue:
        node, depth = queue.popleft()
        parents = db.hypernyms.get(node, ())
        if not parents:
            db._depth_cache[synset_id] = depth
            return depth
        for parent in parents:
            if parent not in seen:
                seen.add(parent)
                queue.append((parent, depth + 1))
    raise CycleError(synset_id)  # unreachable after _check_acyclic


def same_synset(db: WordNetDb, lemma_a: str, lemma_b: str, pos: str) -> bool:
    """True iff the synset-id sets of two lemmas intersect at the given pos.

    Unknown lemmas have empty synset sets, so they never match anything
    (including themselves).
    """
    sets_a = db.synsets_for(lemma_a, pos)
    if not sets_a:
        return False
    sets_b = db.synsets_for(lemma_b, pos)
    return bool(set(sets_a) & set(sets_b))


def _parse_data_file(path: Path, expected_pos: str, synsets, hypernym_edges):
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            if line.startswith("  ") or not line.strip():
                continue
            body = line.split("|", 1)[0]
            fields = body.split()
            try:
                offset = fields[0]
                if not offset.isdigit():
                    raise ValueError(f"offset {offset!r} is not decimal")
                ss_type = fields[2]
                if ss_type not in _COARSE:
                    raise ValueError(f"bad ss_type {ss_type!r}")
                w_cnt = int(fields[3], 16)
                if w_cnt < 1:
                    raise ValueError("w_cnt must be >= 1")
                pos_fields = 4 + 2 * w_cnt
                words = [fields[4 + 2 * i] for i in range(w_cnt)]
                p_cnt = int(fields[pos_fields], 10)
                ptrs = []
                cursor = pos_fields + 1
                for _ in range(p_cnt):
                    symbol, p_offset, p_pos, _src = fields[cursor:cursor + 4]
                    ptrs.append((symbol, p_offset, p_pos))
                    cursor += 4
            except (IndexError, ValueError) as e:
                raise ParseError(f"malformed data line ({e})", str(path), lineno)
            sid = f"{offset}-{ss_type}"
            if sid in synsets:
                raise ParseError(f"duplicate synset {sid}", str(path), lineno)
            synsets[sid] = Synset(id=sid, pos=_COARSE[ss_type],
                                  lemmas=tuple(normalize_lemma(w) for w in words))
            for symbol, p_offset, p_pos in ptrs:
                if symbol in ("@", "@i"):
                    hypernym_edges.setdefault(sid, []).append((f"{p_offset}-{p_pos}", path, lineno))


def _parse_index_file(path: Path, pos_letter: str, index_entries):
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            if line.startswith("  ") or not line.strip():
                continue
            fields = line.split()
            try:
                lemma = fields[0]
                synset_cnt = int(fields[2], 10)
                p_cnt = int(fields[3], 10)
                offsets = fields[4 + p_cnt + 2: 4 + p_cnt + 2 + synset_cnt]
                if len(offsets) != synset_cnt:
                    raise ValueError(f"expected {synset_cnt} offsets, found {len(offsets)}")
            except (IndexError, ValueError) as e:
                raise ParseError(f"malformed index line ({e})", str(path), lineno)
            index_entries.append((normalize_lemma(lemma), pos_letter, offsets, path, lineno))


def _resolve(sid: str, synsets) -> str | None:
    """Resolve a pointer target id, tolerating the adjective a/s split."""
    if sid in synsets:
        return sid
    if sid.endswith("-a"):
        alt = sid[:-2] + "-s"
    elif sid.endswith("-s"):
        alt = sid[:-2] + "-a"
    else:
        return None
    return alt if alt in synsets else None


def load_wordnet(directory: str | os.PathLike) -> WordNetDb:
    """Parse a WordNet database directory into a fully linked WordNetDb."""
    root = Path(directory)
    if not root.is_dir():
        raise ParseError("wordnet directory not found", str(root))
    synsets: dict[str, Synset] = {}
    hypernym_edges: dict[str, list] = {}
    index_entries: list = []
    found = False
    for name, letter in POS_FILES.items():
        data_path = root / f"data.{name}"
        if data_path.exists():
            found = True
            _parse_data_file(data_path, letter, synsets, hypernym_edges)
        index_path = root / f"index.{name}"
        if index_path.exists():
            _parse_index_file(index_path, letter, index_entries)
    if not found:
        raise ParseError("no data.<pos> files found", str(root))

    hypernyms: dict[str, tuple[str, ...]] = {}
    for sid, targets in hypernym_edges.items():
        resolved = []
        for target, path, lineno in targets:
            rid = _resolve(target, synsets)
            if rid is None:
                raise ParseError(f"hypernym target {target} of {sid} not in database",
                                 str(path), lineno)
            resolved.append(rid)
        hypernyms[sid] = tuple(resolved)

    lemma_index: dict[tuple[str, str], list[str]] = {}
    for lemma, letter, offsets, path, lineno in index_entries:
        coarse = _COARSE[letter]
        for offset in offsets:
            sid = _resolve(f"{offset}-{letter}", synsets)
            if sid is None:
                raise ParseError(f"index references unknown synset {offset}-{letter}",
                                 str(path), lineno)
            lemma_index.setdefault((lemma, coarse), [])
            if sid not in lemma_index[(lemma, coarse)]:
                lemma_index[(lemma, coarse)].append(sid)
    # data-file words keep the index usable when index.<pos> is absent
    for sid, syn in synsets.items():
        for lemma in syn.lemmas:
            key = (lemma, syn.pos)
            lemma_index.setdefault(key, [])
            if sid not in lemma_index[key]:
                lemma_index[key].append(sid)

    return WordNetDb(
        synsets=synsets,
        lemma_index={k: tuple(v) for k, v in lemma_index.items()},
        hypernyms=hypernyms,
    )
