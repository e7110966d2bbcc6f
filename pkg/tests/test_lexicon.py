"""Concreteness/imageability lexicon loading and lookup conventions."""

import pytest

from gistscore.errors import ParseError
from gistscore.lexicon import load_lexicon

from conftest import tok


def test_mrc_pos_sensitive_lookup(mrc_lexicon):
    entry = mrc_lexicon.lookup(tok("Apple", pos="NOUN"))
    assert entry.concreteness == 610
    assert entry.imageability == 602
    # a pos the file does not carry falls back to the word-only match
    assert mrc_lexicon.lookup(tok("apple", pos="ADJ")).concreteness == 610
    assert mrc_lexicon.lookup(tok("zebra", pos="NOUN")) is None


def test_megahr_word_then_lemma(megahr_lexicon):
    assert megahr_lexicon.lookup(tok("APPLE", pos="NOUN")).concreteness == 6.1
    # surface miss, lemma hit
    assert megahr_lexicon.lookup(
        tok("running", pos="VERB", lemma="run")).imageability == 4.3
    assert megahr_lexicon.lookup(tok("xylophone", pos="NOUN")) is None


def test_fixture_means(mrc_lexicon):
    entries = [mrc_lexicon.lookup(tok(w, pos="NOUN")) for w in ("apple", "theory")]
    assert sum(e.concreteness for e in entries) / 2 == 480
    assert sum(e.imageability for e in entries) / 2 == 451


def test_range_enforced(tmp_path):
    p = tmp_path / "bad.tsv"
    p.write_text("word\tpos\tconcreteness\timageability\nx\tNOUN\t990\t400\n",
                 encoding="utf-8")
    with pytest.raises(ParseError):
        load_lexicon(p, "mrc")


def test_range_override_comment(tmp_path):
    p = tmp_path / "scaled.tsv"
    p.write_text("# range: 0 1000\nword\tpos\tconcreteness\timageability\n"
                 "x\tNOUN\t990\t400\n", encoding="utf-8")
    lex = load_lexicon(p, "mrc")
    assert lex.value_range == (0.0, 1000.0)
    assert lex.lookup(tok("x", pos="NOUN")).concreteness == 990


def test_header_required(tmp_path):
    p = tmp_path / "nohdr.tsv"
    p.write_text("apple\tNOUN\t610\t602\n", encoding="utf-8")
    with pytest.raises(ParseError):
        load_lexicon(p, "mrc")


def test_column_count_checked(tmp_path):
    p = tmp_path / "cols.tsv"
    p.write_text("word\tpos\tconcreteness\timageability\napple\t610\t602\n",
                 encoding="utf-8")
    with pytest.raises(ParseError) as err:
        load_lexicon(p, "mrc")
    assert ":2" in str(err.value)


def test_unknown_source_rejected(tmp_path):
    p = tmp_path / "x.tsv"
    p.write_text("word\tpos\tconcreteness\timageability\n", encoding="utf-8")
    with pytest.raises(ValueError):
        load_lexicon(p, "glasgow")
