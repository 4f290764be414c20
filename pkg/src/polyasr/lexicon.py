"""Phone inventories and pronunciation lexica over a shared ASCII phone set.

Per-language inventories are merged into one multilingual inventory whose
membership map records which languages contain each symbol; overlap
statistics partition the merged set by membership subset.  All types are
immutable after construction and safe for concurrent reads.
"""

from __future__ import annotations

import logging
import unicodedata
from dataclasses import dataclass, field

from .errors import LexiconError
from .phones import ITALIAN_VOWELS, REFERENCE_LANGUAGES, REFERENCE_PHONE_TABLE

log = logging.getLogger(__name__)


def normalize_word(word: str) -> str:
    """Canonical word form: Unicode NFC, upper-cased (words compare
    case-insensitively; phones stay case-sensitive)."""
    return unicodedata.normalize("NFC", word).upper()


def _check_symbol(symbol: str) -> str:
    if not symbol or any(c.isspace() for c in symbol):
        raise LexiconError(f"invalid phone symbol {symbol!r}: empty or contains whitespace")
    return symbol


@dataclass(frozen=True)
class PhoneInventory:
    """A set of phone symbols plus the languages each symbol belongs to."""

    membership: dict[str, frozenset[str]]

    def __post_init__(self):
        for sym, langs in self.membership.items():
            _check_symbol(sym)
            if not langs:
                raise LexiconError(f"phone {sym!r} belongs to no language")

    @property
    def phones(self) -> frozenset[str]:
        return frozenset(self.membership)

    @property
    def languages(self) -> tuple[str, ...]:
        return tuple(sorted(set().union(*self.membership.values())))

    def __contains__(self, symbol: str) -> bool:
        return symbol in self.membership

    def __len__(self) -> int:
        return len(self.membership)

    def for_language(self, language: str) -> "PhoneInventory":
        """Restrict to the symbols of one language."""
        sub = {
            s: frozenset([language])
            for s, langs in self.membership.items()
            if language in langs
        }
        if not sub:
            raise LexiconError(f"no phones for language {language!r}")
        return PhoneInventory(sub)

    @classmethod
    def single_language(cls, language: str, symbols) -> "PhoneInventory":
        return cls({_check_symbol(s): frozenset([language]) for s in symbols})


def reference_inventory(language: str | None = None) -> PhoneInventory:
    """The built-in it/de/en inventory, or its restriction to one language."""
    inv = PhoneInventory({s: frozenset(langs) for s, langs in REFERENCE_PHONE_TABLE})
    if language is None:
        return inv
    if language not in REFERENCE_LANGUAGES:
        raise LexiconError(f"unknown reference language {language!r}")
    return inv.for_language(language)


def merge_inventories(inventories: list[PhoneInventory]) -> PhoneInventory:
    """Union of symbols; membership records every contributing language.

    Commutative and associative at the (symbol, membership) level.
    """
    if not inventories:
        raise LexiconError("need at least one inventory to merge")
    merged: dict[str, frozenset[str]] = {}
    for inv in inventories:
        for sym in sorted(inv.membership):
            merged[sym] = merged.get(sym, frozenset()) | inv.membership[sym]
    return PhoneInventory(merged)


@dataclass(frozen=True)
class OverlapStats:
    """Partition of a merged inventory by language-membership subset."""

    total: int
    per_subset: dict[frozenset[str], int]

    def count(self, *languages: str) -> int:
        return self.per_subset.get(frozenset(languages), 0)

    def per_language_totals(self) -> dict[str, int]:
        totals: dict[str, int] = {}
        for subset, n in self.per_subset.items():
            for lang in subset:
                totals[lang] = totals.get(lang, 0) + n
        return totals


def overlap_stats(merged: PhoneInventory) -> OverlapStats:
    per_subset: dict[frozenset[str], int] = {}
    for sym in merged.membership:
        key = merged.membership[sym]
        per_subset[key] = per_subset.get(key, 0) + 1
    return OverlapStats(total=len(merged), per_subset=per_subset)


@dataclass(frozen=True)
class Lexicon:
    """Word -> pronunciations for one language; all phones validated against
    the language's inventory."""

    language: str
    entries: dict[str, tuple[tuple[str, ...], ...]]
    inventory: PhoneInventory = field(repr=False, compare=False, default=None)

    def __post_init__(self):
        for word, prons in self.entries.items():
            if not prons:
                raise LexiconError(f"word {word!r} has no pronunciation")
            for pron in prons:
                if not pron:
                    raise LexiconError(f"word {word!r} has an empty pronunciation")

    def __contains__(self, word: str) -> bool:
        return normalize_word(word) in self.entries

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def words(self) -> tuple[str, ...]:
        return tuple(sorted(self.entries))

    def pronunciations(self, word: str) -> tuple[tuple[str, ...], ...]:
        key = normalize_word(word)
        if key not in self.entries:
            raise LexiconError(f"word {word!r} not in {self.language} lexicon")
        return self.entries[key]

    def phones_used(self) -> frozenset[str]:
        used = set()
        for prons in self.entries.values():
            for pron in prons:
                used.update(pron)
        return frozenset(used)


def build_lexicon(language: str, raw_entries, inventory: PhoneInventory) -> Lexicon:
    """Validate and assemble a Lexicon from (word, pronunciation) pairs.

    Duplicate identical entries are dropped with a warning; distinct
    pronunciations for the same word accumulate.
    """
    entries: dict[str, list[tuple[str, ...]]] = {}
    for word, pron in raw_entries:
        key = normalize_word(word)
        pron = tuple(pron)
        if not pron:
            raise LexiconError(f"empty pronunciation for word {word!r}")
        for sym in pron:
            if sym not in inventory:
                raise LexiconError(
                    f"unknown phone symbol {sym!r} in word {word!r} "
                    f"(not in {language} inventory)"
                )
        prev = entries.setdefault(key, [])
        if pron in prev:
            log.warning("duplicate lexicon entry for %r, dropped", key)
            continue
        prev.append(pron)
    return Lexicon(
        language=language,
        entries={w: tuple(p) for w, p in entries.items()},
        inventory=inventory,
    )


def load_lexicon(path, language: str, inventory: PhoneInventory) -> Lexicon:
    """Parse a lexicon file: one `WORD ph1 ph2 ...` entry per line, `#`
    comments, UTF-8.  Errors name the offending word, symbol and line."""
    raw = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            fields = line.split()
            if len(fields) < 2:
                raise LexiconError(
                    f"{path}:{lineno}: entry {fields[0]!r} has an empty pronunciation"
                )
            word, pron = fields[0], fields[1:]
            for sym in pron:
                if sym not in inventory:
                    raise LexiconError(
                        f"{path}:{lineno}: unknown phone symbol {sym!r} in word {word!r}"
                    )
            raw.append((word, pron))
    return build_lexicon(language, raw, inventory)


def save_lexicon(lexicon: Lexicon, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for word in sorted(lexicon.entries):
            for pron in lexicon.entries[word]:
                fh.write(f"{word} {' '.join(pron)}\n")


def load_inventory(path) -> PhoneInventory:
    """Parse an inventory file: one `symbol<TAB>lang1,lang2,...` line per phone."""
    membership: dict[str, frozenset[str]] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            try:
                sym, langs = line.split("\t", 1)
            except ValueError:
                raise LexiconError(f"{path}:{lineno}: expected 'symbol<TAB>langs'") from None
            if sym in membership:
                raise LexiconError(f"{path}:{lineno}: duplicate phone {sym!r}")
            codes = frozenset(c.strip() for c in langs.split(",") if c.strip())
            if not codes:
                raise LexiconError(f"{path}:{lineno}: phone {sym!r} has no languages")
            membership[_check_symbol(sym)] = codes
    return PhoneInventory(membership)


def save_inventory(inventory: PhoneInventory, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for sym in sorted(inventory.membership):
            fh.write(f"{sym}\t{','.join(sorted(inventory.membership[sym]))}\n")


def normalize_italian(pron, vowels=ITALIAN_VOWELS) -> tuple[str, ...]:
    """Collapse immediately repeated consonant symbols (geminates) to one
    occurrence; repeated vowels are preserved.  Idempotent."""
    out: list[str] = []
    for sym in pron:
        if out and out[-1] == sym and sym not in vowels:
            continue
        out.append(sym)
    return tuple(out)
