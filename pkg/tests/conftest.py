"""Shared fixtures: tiny hand-built linguistic resources.

The WordNet fixture ontology (hand-counted depths in parens):

    nouns: entity(0) <- animal(1) <- dog(2), cat(2)
           pet(2): parents animal(1) and dog(2), shortest path wins
           dog(2) <- hound(3) <- puppy(4)
           lemma "boxer" names two synsets, at depths 2 and 4
    verbs: move(0) <- run/sprint(1), walk(1); eat(0) is a second root

"run" and "sprint" share a synset; every other verb pair does not.
"""

from __future__ import annotations

import numpy as np
import pytest

from gistscore.textmodel import (Corpus, Document, Paragraph, Provenance,
                                 Sentence, Token)

NOUN_DATA = """\
  1 fixture header line, skipped by the parser
00000001 03 n 01 entity 0 000 | that which exists
00000002 03 n 01 animal 0 001 @ 00000001 n 0000 | a living organism
00000003 03 n 02 dog 0 domestic_dog 1 001 @ 00000002 n 0000 | a canine
00000004 03 n 01 cat 0 001 @ 00000002 n 0000 | a feline
00000005 03 n 01 pet 0 002 @ 00000002 n 0000 @ 00000003 n 0000 | animal kept for company
00000006 03 n 01 hound 0 001 @ 00000003 n 0000 | a hunting dog
00000007 03 n 01 puppy 0 001 @ 00000006 n 0000 | a young dog
00000008 03 n 01 boxer 0 001 @ 00000002 n 0000 | a fighter
00000009 03 n 01 boxer 1 001 @ 00000006 n 0000 | a dog breed
00000010 03 n 01 apple 0 001 @ 00000001 n 0000 | a fruit
"""

VERB_DATA = """\
  1 fixture header line, skipped by the parser
00000101 29 v 01 move 0 000 | change position
00000102 29 v 02 run 0 sprint 1 001 @ 00000101 v 0000 | move fast
00000103 29 v 01 walk 0 001 @ 00000101 v 0000 | move on foot
00000104 29 v 01 eat 0 000 | consume food
"""

NOUN_INDEX = """\
  1 fixture header line, skipped by the parser
entity n 1 0 1 0 00000001
animal n 1 0 1 0 00000002
dog n 1 1 @ 1 1 00000003
cat n 1 1 @ 1 1 00000004
pet n 1 1 @ 1 0 00000005
hound n 1 1 @ 1 0 00000006
puppy n 1 1 @ 1 0 00000007
boxer n 2 1 @ 2 0 00000008 00000009
apple n 1 1 @ 1 0 00000010
"""

VERB_INDEX = """\
  1 fixture header line, skipped by the parser
move v 1 0 1 0 00000101
run v 1 1 @ 1 1 00000102
sprint v 1 1 @ 1 0 00000102
walk v 1 1 @ 1 0 00000103
eat v 1 0 1 0 00000104
"""

# mrc scale 100-700: apple/theory give means conc 480, imag 451
MRC_TSV = """\
word\tpos\tconcreteness\timageability
apple\tNOUN\t610\t602
theory\tNOUN\t350\t300
dog\tNOUN\t590\t580
cat\tNOUN\t600\t610
run\tVERB\t420\t430
walk\tVERB\t440\t450
idea\tNOUN\t270\t280
red\tADJ\t510\t520
"""

# megahr scale 1-7, keyed by word form alone (pos column left empty)
MEGAHR_TSV = """\
word\tpos\tconcreteness\timageability
apple\t\t6.1\t6.02
theory\t\t3.5\t3.0
dog\t\t5.9\t5.8
cat\t\t6.0\t6.1
run\t\t4.2\t4.3
walk\t\t4.4\t4.5
idea\t\t2.7\t2.8
red\t\t5.1\t5.2
"""

WORD_VECTORS = {
    # unit axes and simple combinations: cosines are hand-checkable
    "dog": (1.0, 0.0, 0.0),
    "cat": (1.0, 0.0, 0.0),      # cos(dog, cat) = 1
    "apple": (0.0, 1.0, 0.0),    # orthogonal to dog
    "theory": (0.0, 0.0, 1.0),
    "run": (1.0, 0.0, 0.0),
    "sprint": (1.0, 0.0, 0.0),
    "walk": (0.0, 1.0, 0.0),     # cos(run, walk) = 0
    "eat": (1.0, 1.0, 0.0),      # cos(run, eat) = 1/sqrt(2)
    "move": (0.0, 0.0, 1.0),
    "the": (0.5, 0.5, 0.5),
    "a": (0.5, 0.5, 0.5),
}


def write_vector_file(path, entries: dict[str, tuple[float, ...]], dim: int | None = None):
    keys = list(entries)
    if dim is None:
        dim = len(next(iter(entries.values()))) if entries else 0
    lines = [f"{len(keys)} {dim}"]
    for key in keys:
        vec = " ".join(repr(float(x)) for x in entries[key])
        lines.append(f"{key} {vec}")
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path


def write_wordnet_dir(root):
    root.mkdir(parents=True, exist_ok=True)
    (root / "data.noun").write_text(NOUN_DATA, encoding="utf-8")
    (root / "data.verb").write_text(VERB_DATA, encoding="utf-8")
    (root / "index.noun").write_text(NOUN_INDEX, encoding="utf-8")
    (root / "index.verb").write_text(VERB_INDEX, encoding="utf-8")
    return root


def tok(surface: str, pos: str = "OTHER", lemma: str | None = None,
        vector_ref: str | None = None) -> Token:
    return Token(surface=surface, lemma=lemma or surface.lower(), pos=pos,
                 vector_ref=vector_ref)


def sent(tokens, index: int = 0, embedding_ref: str | None = None) -> Sentence:
    parsed = tuple(t if isinstance(t, Token) else tok(t) for t in tokens)
    return Sentence(tokens=parsed, embedding_ref=embedding_ref,
                    index_in_paragraph=index)


def para(sentences, coref: int | None = None) -> Paragraph:
    built = tuple(
        s if isinstance(s, Sentence) else sent(s, i) for i, s in enumerate(sentences))
    return Paragraph(sentences=built, coref_chain_count=coref)


def doc(doc_id: str, paragraphs, group: str | None = None) -> Document:
    built = tuple(p if isinstance(p, Paragraph) else para(p) for p in paragraphs)
    return Document(id=doc_id, paragraphs=built, group_label=group)


def corpus_of(*docs: Document, source: str = "fixture") -> Corpus:
    return Corpus(tuple(docs), Provenance(source=source, parser="fixture"))


@pytest.fixture(scope="session")
def wordnet_dir(tmp_path_factory):
    return write_wordnet_dir(tmp_path_factory.mktemp("wn") / "db")


@pytest.fixture(scope="session")
def wordnet(wordnet_dir):
    from gistscore.wordnetdb import load_wordnet
    return load_wordnet(wordnet_dir)


@pytest.fixture(scope="session")
def lexicon_dir(tmp_path_factory):
    d = tmp_path_factory.mktemp("lex")
    (d / "mrc.tsv").write_text(MRC_TSV, encoding="utf-8")
    (d / "megahr.tsv").write_text(MEGAHR_TSV, encoding="utf-8")
    return d


@pytest.fixture(scope="session")
def mrc_lexicon(lexicon_dir):
    from gistscore.lexicon import load_lexicon
    return load_lexicon(lexicon_dir / "mrc.tsv", "mrc")


@pytest.fixture(scope="session")
def megahr_lexicon(lexicon_dir):
    from gistscore.lexicon import load_lexicon
    return load_lexicon(lexicon_dir / "megahr.tsv", "megahr")


@pytest.fixture(scope="session")
def word_vector_file(tmp_path_factory):
    return write_vector_file(tmp_path_factory.mktemp("vec") / "words.txt", WORD_VECTORS)


@pytest.fixture(scope="session")
def word_store(word_vector_file):
    from gistscore.vectors import load_vectors
    return load_vectors(word_vector_file)


@pytest.fixture(scope="session")
def full_resources(wordnet, mrc_lexicon, megahr_lexicon, word_store):
    from gistscore.indices import Resources
    return Resources(word_store=word_store, wordnet=wordnet,
                     mrc=mrc_lexicon, megahr=megahr_lexicon)


@pytest.fixture()
def rng():
    return np.random.RandomState(20260816)
