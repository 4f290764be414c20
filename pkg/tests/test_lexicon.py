import logging

import pytest

from polyasr.errors import LexiconError
from polyasr.lexicon import (
    Lexicon,
    PhoneInventory,
    build_lexicon,
    load_inventory,
    load_lexicon,
    merge_inventories,
    normalize_italian,
    normalize_word,
    overlap_stats,
    reference_inventory,
    save_inventory,
    save_lexicon,
)
from polyasr.phones import REFERENCE_PHONE_TABLE


def test_reference_inventory_size():
    assert len(reference_inventory()) == 67
    assert len(reference_inventory("it")) == 28
    assert len(reference_inventory("de")) == 45
    assert len(reference_inventory("en")) == 43


def test_reference_overlap_counts():
    stats = overlap_stats(reference_inventory())
    assert stats.total == 67
    assert stats.count("it", "de", "en") == 18
    assert stats.count("de", "en") == 9
    assert stats.count("it", "de") == 2
    assert stats.count("it", "en") == 2
    assert stats.count("de") == 16
    assert stats.count("en") == 14
    assert stats.count("it") == 6


def test_reference_per_language_totals():
    totals = overlap_stats(reference_inventory()).per_language_totals()
    assert totals == {"it": 28, "de": 45, "en": 43}


def test_overlap_subset_counts_sum_to_total():
    stats = overlap_stats(reference_inventory())
    assert sum(stats.per_subset.values()) == stats.total


def test_merge_reference_pair_matches_set_union_oracle():
    # Independent oracle: plain set union over the embedded table rows.
    it_syms = {s for s, langs in REFERENCE_PHONE_TABLE if "it" in langs}
    de_syms = {s for s, langs in REFERENCE_PHONE_TABLE if "de" in langs}
    expected = len(it_syms | de_syms)

    merged = merge_inventories([reference_inventory("it"), reference_inventory("de")])
    assert len(merged) == expected == 53  # 28 + 45 - 20 shared


def test_merge_full_reference_reproduces_membership():
    merged = merge_inventories(
        [reference_inventory(lang) for lang in ("it", "de", "en")]
    )
    assert merged.membership == reference_inventory().membership


def test_merge_idempotent_commutative_associative():
    it = reference_inventory("it")
    de = reference_inventory("de")
    en = reference_inventory("en")
    assert merge_inventories([it, it]).membership == it.membership
    ab = merge_inventories([it, de]).membership
    ba = merge_inventories([de, it]).membership
    assert ab == ba
    left = merge_inventories([merge_inventories([it, de]), en]).membership
    right = merge_inventories([it, merge_inventories([de, en])]).membership
    assert left == right


def test_single_language_stats():
    inv = PhoneInventory.single_language("xx", ["a", "b", "c"])
    stats = overlap_stats(inv)
    assert stats.total == 3
    assert stats.count("xx") == 3


def test_merge_requires_inventory():
    with pytest.raises(LexiconError):
        merge_inventories([])


# -- normalize_italian ------------------------------------------------------


def test_geminate_collapse():
    assert normalize_italian(["g", "a", "t", "t", "o"]) == ("g", "a", "t", "o")


def test_no_geminates_identity():
    assert normalize_italian(["k", "a", "z", "a"]) == ("k", "a", "z", "a")


def test_repeated_vowels_preserved():
    assert normalize_italian(["a", "a"]) == ("a", "a")


def test_triple_consonant_collapses_to_one():
    assert normalize_italian(["t", "t", "t"]) == ("t",)


@pytest.mark.parametrize(
    "pron",
    [
        ["g", "a", "t", "t", "o"],
        ["a", "a", "l", "l", "l", "e"],
        ["s", "s"],
        [],
    ],
)
def test_normalize_italian_idempotent(pron):
    once = normalize_italian(pron)
    assert normalize_italian(once) == once


# -- lexicon parsing --------------------------------------------------------


def en_like_inventory():
    return PhoneInventory.single_language("en", ["k", "AE", "t", "a", "z"])


def test_load_lexicon_basic(tmp_path):
    p = tmp_path / "lex.txt"
    p.write_text("CAT k AE t\n# comment line\n\nCAZA k a z a  # trailing comment\n")
    lex = load_lexicon(p, "en", en_like_inventory())
    assert lex.pronunciations("CAT") == (("k", "AE", "t"),)
    assert lex.pronunciations("cat") == (("k", "AE", "t"),)  # case-insensitive
    assert len(lex) == 2


def test_load_lexicon_reference_italian_word(tmp_path):
    p = tmp_path / "lex.txt"
    p.write_text("CASA k a z a\n")
    lex = load_lexicon(p, "it", reference_inventory("it"))
    assert lex.pronunciations("CASA") == (("k", "a", "z", "a"),)


def test_load_lexicon_unknown_phone_names_symbol(tmp_path):
    p = tmp_path / "lex.txt"
    p.write_text("CAT k XX t\n")
    with pytest.raises(LexiconError) as exc:
        load_lexicon(p, "en", en_like_inventory())
    msg = str(exc.value)
    assert "XX" in msg and "CAT" in msg and ":1" in msg


def test_load_lexicon_empty_pronunciation(tmp_path):
    p = tmp_path / "lex.txt"
    p.write_text("CAT\n")
    with pytest.raises(LexiconError):
        load_lexicon(p, "en", en_like_inventory())


def test_duplicate_entry_warns_and_dedups(tmp_path, caplog):
    p = tmp_path / "lex.txt"
    p.write_text("CAT k AE t\nCAT k AE t\n")
    with caplog.at_level(logging.WARNING):
        lex = load_lexicon(p, "en", en_like_inventory())
    assert lex.pronunciations("CAT") == (("k", "AE", "t"),)
    assert any("duplicate" in r.message for r in caplog.records)


def test_multiple_pronunciations_kept():
    inv = en_like_inventory()
    lex = build_lexicon("en", [("CAT", ["k", "AE", "t"]), ("CAT", ["k", "a", "t"])], inv)
    assert len(lex.pronunciations("CAT")) == 2


def test_lexicon_round_trip(tmp_path):
    inv = reference_inventory("it")
    lex = build_lexicon("it", [("CASA", ["k", "a", "z", "a"]), ("GATTO", ["g", "a", "t", "o"])], inv)
    path = tmp_path / "out.lex"
    save_lexicon(lex, path)
    again = load_lexicon(path, "it", inv)
    assert again.entries == lex.entries


def test_inventory_round_trip(tmp_path):
    path = tmp_path / "inv.tsv"
    save_inventory(reference_inventory(), path)
    again = load_inventory(path)
    assert again.membership == reference_inventory().membership


def test_normalize_word():
    assert normalize_word("cat") == "CAT"
    assert normalize_word("Straße") == "STRASSE".replace("SS", "SS")  # upper() expands ß


def test_empty_pron_rejected_in_builder():
    with pytest.raises(LexiconError):
        Lexicon(language="en", entries={"CAT": ((),)})
