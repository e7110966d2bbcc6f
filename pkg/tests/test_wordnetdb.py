"""WordNet fixture parsing, path lengths, and synset overlap."""

import pytest

from gistscore.errors import CycleError, ParseError, UnknownSynset
from gistscore.wordnetdb import (hypernym_path_length, load_wordnet,
                                 normalize_lemma, same_synset)

from conftest import write_wordnet_dir


def test_fixture_loads(wordnet):
    assert "00000003-n" in wordnet.synsets
    assert wordnet.synsets["00000003-n"].lemmas == ("dog", "domestic_dog")
    assert wordnet.synsets["00000102-v"].pos == "VERB"


def test_lemma_lookup(wordnet):
    assert wordnet.synsets_for("dog", "NOUN") == ("00000003-n",)
    assert wordnet.synsets_for("Dog", "NOUN") == ("00000003-n",)
    assert wordnet.synsets_for("domestic dog", "NOUN") == ("00000003-n",)
    assert wordnet.synsets_for("dog", "VERB") == ()
    assert wordnet.synsets_for("unicorn", "NOUN") == ()
    assert set(wordnet.synsets_for("boxer", "NOUN")) == {"00000008-n", "00000009-n"}


def test_hand_counted_depths(wordnet):
    assert hypernym_path_length(wordnet, "00000001-n") == 0  # entity, a root
    assert hypernym_path_length(wordnet, "00000002-n") == 1  # animal
    assert hypernym_path_length(wordnet, "00000003-n") == 2  # dog
    assert hypernym_path_length(wordnet, "00000007-n") == 4  # puppy
    assert hypernym_path_length(wordnet, "00000101-v") == 0  # move, a verb root
    assert hypernym_path_length(wordnet, "00000102-v") == 1  # run


def test_diamond_takes_shortest_path(wordnet):
    # pet points at both animal (depth 1) and dog (depth 2)
    assert wordnet.hypernyms["00000005-n"] == ("00000002-n", "00000003-n")
    assert hypernym_path_length(wordnet, "00000005-n") == 2


def test_unknown_synset(wordnet):
    with pytest.raises(UnknownSynset):
        hypernym_path_length(wordnet, "99999999-n")


def test_same_synset(wordnet):
    assert same_synset(wordnet, "run", "sprint", "VERB")
    assert same_synset(wordnet, "dog", "domestic_dog", "NOUN")
    assert not same_synset(wordnet, "run", "walk", "VERB")
    assert not same_synset(wordnet, "run", "run", "NOUN")  # wrong pos
    # unknown lemmas never match, not even themselves
    assert not same_synset(wordnet, "frolic", "frolic", "VERB")


def test_roots(wordnet):
    noun_roots = set(wordnet.roots("NOUN"))
    assert "00000001-n" in noun_roots
    assert "00000003-n" not in noun_roots
    assert set(wordnet.roots("VERB")) == {"00000101-v", "00000104-v"}


def test_cycle_detection(tmp_path):
    d = tmp_path / "wn"
    d.mkdir()
    (d / "data.noun").write_text(
        "00000001 03 n 01 alpha 0 001 @ 00000002 n 0000 | a\n"
        "00000002 03 n 01 beta 0 001 @ 00000001 n 0000 | b\n",
        encoding="utf-8")
    with pytest.raises(CycleError):
        load_wordnet(d)


def test_dangling_hypernym_target(tmp_path):
    d = tmp_path / "wn"
    d.mkdir()
    (d / "data.noun").write_text(
        "00000001 03 n 01 alpha 0 001 @ 77777777 n 0000 | a\n", encoding="utf-8")
    with pytest.raises(ParseError) as err:
        load_wordnet(d)
    assert "77777777" in str(err.value)


def test_malformed_data_line(tmp_path):
    d = tmp_path / "wn"
    d.mkdir()
    (d / "data.noun").write_text("00000001 03 x 01 alpha 0 000 | bad type\n",
                                 encoding="utf-8")
    with pytest.raises(ParseError):
        load_wordnet(d)


def test_missing_directory(tmp_path):
    with pytest.raises(ParseError):
        load_wordnet(tmp_path / "absent")


def test_empty_directory(tmp_path):
    d = tmp_path / "wn"
    d.mkdir()
    with pytest.raises(ParseError):
        load_wordnet(d)


def test_adjective_satellite_resolution(tmp_path):
    d = tmp_path / "wn"
    d.mkdir()
    # satellite synset (ss_type s) pointed at with pos letter "a"
    (d / "data.adj").write_text(
        "00000001 00 a 01 good 0 000 | fine\n"
        "00000002 00 s 01 fine 0 001 @ 00000001 a 0000 | like good\n",
        encoding="utf-8")
    db = load_wordnet(d)
    assert hypernym_path_length(db, "00000002-s") == 1
    assert db.synsets_for("fine", "ADJ") == ("00000002-s",)


def test_normalize_lemma():
    assert normalize_lemma("  Domestic Dog ") == "domestic_dog"


def test_depth_cache_consistency(tmp_path):
    db = load_wordnet(write_wordnet_dir(tmp_path / "wn"))
    first = hypernym_path_length(db, "00000007-n")
    second = hypernym_path_length(db, "00000007-n")
    assert first == second == 4
