"""Shared fixtures: a 5-document raw sample plus the linguistic resources
(wordnet subset, concreteness/imageability lexicons) that make every
index variant computable on its vocabulary after export."""

from __future__ import annotations

import pytest

from gistscore_exporter import ExportProfile, export_corpus

# Five documents, each 2 paragraphs x 2 sentences, written so that every
# document carries at least two taggable verbs, nouns covered by the
# wordnet and lexicon fixtures, connective cues, and (except d5's first
# paragraph, which deliberately has no repeated mention) coreference.
SAMPLE_TEXTS = {
    "low/d1.txt": (
        "The dog ran into the garden. The dog ate an apple because it was hungry.\n\n"
        "A cat slept under the tree. Therefore the dog barked at the cat.\n"),
    "low/d2.txt": (
        "A small bird played near the water. The bird jumped because the cat chased it.\n\n"
        "The child walked to the house. However, the child ran home quickly.\n"),
    "high/d3.txt": (
        "The cat ate the apple. Therefore the cat slept in the garden.\n\n"
        "A dog chased the bird. The dog jumped over the water because the bird flew away.\n"),
    "high/d4.txt": (
        "The children played near the tree. They ran into the house because rain fell.\n\n"
        "The dog slept under the tree. The cat walked past the dog.\n"),
    "d5.txt": (
        "A bird sat on the house. The water looked calm.\n\n"
        "The dog chased the cat. The dog jumped because the cat ran fast.\n"),
}

SAMPLE_IDS = ("d5", "high/d3", "high/d4", "low/d1", "low/d2")  # sorted order

NOUN_DATA = """\
  1 fixture header line, skipped by the parser
00000001 03 n 01 entity 0 000 | that which exists
00000002 03 n 01 animal 0 001 @ 00000001 n 0000 | a living organism
00000003 03 n 01 dog 0 001 @ 00000002 n 0000 | a canine
00000004 03 n 01 cat 0 001 @ 00000002 n 0000 | a feline
00000005 03 n 01 bird 0 001 @ 00000002 n 0000 | a feathered animal
00000006 03 n 01 person 0 001 @ 00000001 n 0000 | a human being
00000007 03 n 01 child 0 001 @ 00000006 n 0000 | a young person
00000008 03 n 01 plant 0 001 @ 00000001 n 0000 | living thing that grows
00000009 03 n 01 tree 0 001 @ 00000008 n 0000 | a woody plant
00000010 03 n 01 apple 0 001 @ 00000008 n 0000 | a fruit
00000011 03 n 01 house 0 001 @ 00000001 n 0000 | a dwelling
00000012 03 n 01 water 0 001 @ 00000001 n 0000 | a liquid
00000013 03 n 01 garden 0 001 @ 00000001 n 0000 | a plot of ground
00000014 03 n 01 rain 0 001 @ 00000012 n 0000 | falling water
"""

VERB_DATA = """\
  1 fixture header line, skipped by the parser
00000101 29 v 01 move 0 000 | change position
00000102 29 v 02 run 0 sprint 1 001 @ 00000101 v 0000 | move fast
00000103 29 v 01 walk 0 001 @ 00000101 v 0000 | move on foot
00000104 29 v 01 jump 0 001 @ 00000101 v 0000 | spring upward
00000105 29 v 01 chase 0 001 @ 00000101 v 0000 | pursue
00000106 29 v 01 fly 0 001 @ 00000101 v 0000 | move through air
00000107 29 v 01 fall 0 001 @ 00000101 v 0000 | descend
00000108 29 v 01 eat 0 000 | consume food
00000109 29 v 01 sleep 0 000 | be asleep
00000110 29 v 01 bark 0 000 | make a dog sound
00000111 29 v 01 play 0 000 | engage in games
00000112 29 v 01 sit 0 000 | be seated
00000113 29 v 01 look 0 000 | direct the eyes
"""

NOUN_INDEX = """\
  1 fixture header line, skipped by the parser
entity n 1 0 1 0 00000001
animal n 1 1 @ 1 1 00000002
dog n 1 1 @ 1 1 00000003
cat n 1 1 @ 1 1 00000004
bird n 1 1 @ 1 1 00000005
person n 1 1 @ 1 1 00000006
child n 1 1 @ 1 1 00000007
plant n 1 1 @ 1 1 00000008
tree n 1 1 @ 1 1 00000009
apple n 1 1 @ 1 0 00000010
house n 1 1 @ 1 0 00000011
water n 1 1 @ 1 0 00000012
garden n 1 1 @ 1 0 00000013
rain n 1 1 @ 1 0 00000014
"""

VERB_INDEX = """\
  1 fixture header line, skipped by the parser
move v 1 0 1 0 00000101
run v 1 1 @ 1 1 00000102
sprint v 1 1 @ 1 0 00000102
walk v 1 1 @ 1 0 00000103
jump v 1 1 @ 1 0 00000104
chase v 1 1 @ 1 0 00000105
fly v 1 1 @ 1 0 00000106
fall v 1 1 @ 1 0 00000107
eat v 1 0 1 0 00000108
sleep v 1 0 1 0 00000109
bark v 1 0 1 0 00000110
play v 1 0 1 0 00000111
sit v 1 0 1 0 00000112
look v 1 0 1 0 00000113
"""

# (pos, concreteness, imageability) on the MRC-style 100-700 scale; the
# megahr-style file divides by 100 and drops the pos column.
LEXICON_VOCAB = {
    "dog": ("NOUN", 590, 580), "cat": ("NOUN", 600, 610), "bird": ("NOUN", 560, 540),
    "apple": ("NOUN", 610, 602), "tree": ("NOUN", 580, 570), "house": ("NOUN", 585, 575),
    "water": ("NOUN", 570, 560), "garden": ("NOUN", 550, 545), "child": ("NOUN", 540, 530),
    "rain": ("NOUN", 530, 525), "home": ("NOUN", 520, 510),
    "run": ("VERB", 420, 430), "walk": ("VERB", 440, 450), "eat": ("VERB", 445, 455),
    "sleep": ("VERB", 410, 415), "bark": ("VERB", 460, 465), "chase": ("VERB", 430, 435),
    "jump": ("VERB", 450, 452), "play": ("VERB", 425, 428), "sit": ("VERB", 435, 438),
    "look": ("VERB", 380, 385), "fly": ("VERB", 442, 446), "fall": ("VERB", 428, 433),
    "small": ("ADJ", 390, 400), "calm": ("ADJ", 340, 350), "hungry": ("ADJ", 400, 410),
    "fast": ("ADJ", 370, 380), "quickly": ("ADV", 330, 335), "away": ("ADV", 300, 305),
}


def write_sample_corpus(root):
    for rel, text in SAMPLE_TEXTS.items():
        path = root / rel
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
    return root


def write_wordnet_dir(root):
    root.mkdir(parents=True, exist_ok=True)
    (root / "data.noun").write_text(NOUN_DATA, encoding="utf-8")
    (root / "data.verb").write_text(VERB_DATA, encoding="utf-8")
    (root / "index.noun").write_text(NOUN_INDEX, encoding="utf-8")
    (root / "index.verb").write_text(VERB_INDEX, encoding="utf-8")
    return root


def write_lexicons(directory):
    mrc_rows = ["word\tpos\tconcreteness\timageability"]
    megahr_rows = ["word\tpos\tconcreteness\timageability"]
    for word, (pos, conc, imag) in LEXICON_VOCAB.items():
        mrc_rows.append(f"{word}\t{pos}\t{conc}\t{imag}")
        megahr_rows.append(f"{word}\t\t{conc / 100:.2f}\t{imag / 100:.2f}")
    (directory / "mrc.tsv").write_text("\n".join(mrc_rows) + "\n", encoding="utf-8")
    (directory / "megahr.tsv").write_text("\n".join(megahr_rows) + "\n", encoding="utf-8")
    return directory


@pytest.fixture(scope="session")
def sample_corpus_dir(tmp_path_factory):
    return write_sample_corpus(tmp_path_factory.mktemp("raw"))


@pytest.fixture(scope="session")
def exported(tmp_path_factory, sample_corpus_dir):
    """The 5-document sample exported once with the default backend."""
    out = tmp_path_factory.mktemp("exported")
    profile = ExportProfile(output_dir=out, embedding_dim=16)
    return export_corpus(sample_corpus_dir, profile)


@pytest.fixture(scope="session")
def scoring_resources(tmp_path_factory, exported):
    """Engine Resources wired to the exported sidecars + fixture wordnet/lexicons."""
    from gistscore import Resources, load_lexicon, load_vectors, load_wordnet
    wn_dir = write_wordnet_dir(tmp_path_factory.mktemp("wn") / "db")
    lex_dir = write_lexicons(tmp_path_factory.mktemp("lex"))
    return Resources(
        sentence_store=load_vectors(exported.sentence_vectors_path),
        token_store=load_vectors(exported.token_vectors_path),
        wordnet=load_wordnet(wn_dir),
        mrc=load_lexicon(lex_dir / "mrc.tsv", "mrc"),
        megahr=load_lexicon(lex_dir / "megahr.tsv", "megahr"),
    )
