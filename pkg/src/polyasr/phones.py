"""Built-in IPA-like (ASCII) phone set shared by Italian, German and English.

The table below is the reference inventory the toolkit ships with: 67 phone
symbols with per-language membership over the codes ``it``, ``de``, ``en``.
It is the ground truth for the lexicon overlap statistics and the default
inventory for the synthetic corpus.
"""

from __future__ import annotations

# (symbol, languages) rows; symbols are ASCII, case-sensitive ("S" != "s").
REFERENCE_PHONE_TABLE: tuple[tuple[str, tuple[str, ...]], ...] = (
    ("A\"", ("de",)),
    ("AA", ("en",)),
    ("AE", ("en",)),
    ("AH", ("en",)),
    ("AI", ("de", "en")),
    ("AU", ("de", "en")),
    ("AX", ("en",)),
    ("C", ("de",)),
    ("DH", ("en",)),
    ("E@", ("de",)),
    ("EA", ("en",)),
    ("ER6", ("de",)),
    ("ER", ("en",)),
    ("EY", ("en",)),
    ("E", ("de", "en")),
    ("IA", ("en",)),
    ("I", ("de", "en")),
    ("J", ("it",)),
    ("L", ("it",)),
    ("NG", ("de", "en")),
    ("O\"2", ("de",)),
    ("O\"9", ("de",)),
    ("OH", ("en",)),
    ("OW", ("en",)),
    ("OY", ("de", "en")),
    ("O", ("de", "en")),
    ("R", ("de",)),
    ("S", ("it", "de", "en")),
    ("TH", ("en",)),
    ("U\"", ("de",)),
    ("UA", ("en",)),
    ("U", ("de", "en")),
    ("Z", ("en",)),
    ("a:", ("de",)),
    ("a", ("it", "de")),
    ("b", ("it", "de", "en")),
    ("dZ", ("it", "de", "en")),
    ("d", ("it", "de", "en")),
    ("dz", ("it",)),
    ("e:", ("de",)),
    ("e", ("it",)),
    ("f", ("it", "de", "en")),
    ("g", ("it", "de", "en")),
    ("h", ("de", "en")),
    ("i:", ("de",)),
    ("i", ("it",)),
    ("j", ("it", "de", "en")),
    ("k", ("it", "de", "en")),
    ("l", ("it", "de", "en")),
    ("m", ("it", "de", "en")),
    ("n", ("it", "de", "en")),
    ("o:", ("de",)),
    ("o", ("it",)),
    ("p", ("it", "de", "en")),
    ("pf", ("de",)),
    ("r", ("it", "de", "en")),
    ("s", ("it", "de", "en")),
    ("tS", ("it", "de", "en")),
    ("t", ("it", "de", "en")),
    ("ts", ("it", "de")),
    ("u\"", ("de",)),
    ("u:", ("de",)),
    ("u", ("it", "en")),
    ("v", ("it", "de", "en")),
    ("w", ("it", "en")),
    ("x", ("de",)),
    ("z", ("it", "de", "en")),
)

REFERENCE_LANGUAGES = ("it", "de", "en")

# Italian vowel letters; geminate collapsing leaves these untouched.
ITALIAN_VOWELS = frozenset({"a", "e", "i", "o", "u"})
