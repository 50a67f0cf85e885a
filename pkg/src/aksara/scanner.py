"""IAST scanner: romanized text to graphemes and akṣaras.

An akṣara is the orthographic syllable of Indic writing: an optional
consonant cluster, one vowel, and an optional anusvāra or visarga. The
tokenizer treats a document as a single continuous akṣara stream --
word boundaries, punctuation and digits are separators that the stream
flows across, so consonants with no vowel of their own attach forward
to the next vowel ("tat tvam" -> ta, ttva, m).

Every token carries a half-open byte span into the canonical form of
the source (NFC-composed, lowercased), so downstream matches can be
projected back onto the text.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass
from typing import Iterable, NamedTuple

VOWEL = "vowel"
CONSONANT = "consonant"
ANUSVARA = "anusvara"
VISARGA = "visarga"
AVAGRAHA = "avagraha"
OTHER = "other"

# Vocalic ḷ is dropped in favour of the Dravidian consonant ḷ; ē/ō and
# ḻ/ṟ/ṉ are included because the target corpora span Dravidian languages.
VOWELS = ("a", "ā", "i", "ī", "u", "ū", "ṛ", "ṝ", "ḹ", "e", "ē", "ai", "o", "ō", "au")
CONSONANTS = (
    "k", "kh", "g", "gh", "ṅ",
    "c", "ch", "j", "jh", "ñ",
    "ṭ", "ṭh", "ḍ", "ḍh", "ṇ",
    "t", "th", "d", "dh", "n",
    "p", "ph", "b", "bh", "m",
    "y", "r", "l", "v",
    "ś", "ṣ", "s", "h",
    "ḻ", "ṟ", "ṉ", "ḷ",
)
ANUSVARAS = ("ṃ", "ṁ", "m̐")  # m̐ stays two codepoints even under NFC
VISARGAS = ("ḥ",)
AVAGRAHAS = ("'",)

_ALPHABET: dict[str, str] = {}
for _c in VOWELS:
    _ALPHABET[_c] = VOWEL
for _c in CONSONANTS:
    _ALPHABET[_c] = CONSONANT
for _c in ANUSVARAS:
    _ALPHABET[_c] = ANUSVARA
for _c in VISARGAS:
    _ALPHABET[_c] = VISARGA
for _c in AVAGRAHAS:
    _ALPHABET[_c] = AVAGRAHA

_MAX_UNIT = max(len(u) for u in _ALPHABET)


class Span(NamedTuple):
    """Half-open byte range [start, end) into the canonical source text."""

    start: int
    end: int


@dataclass(frozen=True)
class Grapheme:
    """One alphabet unit (or a single unrecognized codepoint, kind=other)."""

    kind: str
    surface: str
    span: Span


@dataclass(frozen=True)
class Aksara:
    """One syllable: optional avagraha prefix + consonant onset + vowel + coda.

    A trailing consonant cluster with no vowel to attach to becomes a
    degenerate akṣara (nucleus is None); damaged fragments must tokenize
    rather than fail.
    """

    onset: tuple[Grapheme, ...]
    nucleus: Grapheme | None
    coda: Grapheme | None
    prefix: Grapheme | None
    span: Span

    @property
    def degenerate(self) -> bool:
        return self.nucleus is None

    @property
    def graphemes(self) -> tuple[Grapheme, ...]:
        parts: list[Grapheme] = []
        if self.prefix is not None:
            parts.append(self.prefix)
        parts.extend(self.onset)
        if self.nucleus is not None:
            parts.append(self.nucleus)
        if self.coda is not None:
            parts.append(self.coda)
        return tuple(parts)

    @property
    def surface(self) -> str:
        return "".join(g.surface for g in self.graphemes)


@dataclass(frozen=True)
class TokenStream:
    """Tokenized document: ordered akṣaras plus the canonical source text."""

    document_id: str
    aksaras: tuple[Aksara, ...]
    text: str = ""
    source_length: int = 0

    def __len__(self) -> int:
        return len(self.aksaras)

    def surfaces(self) -> tuple[str, ...]:
        return tuple(a.surface for a in self.aksaras)


def canonicalize(text: str) -> str:
    """Canonical form used for scanning and as the span reference.

    NFC composition makes "ā" one codepoint whether typed precomposed or
    as a + combining macron; case is folded to lowercase; typographic
    right quotes become the ASCII avagraha.
    """
    text = unicodedata.normalize("NFC", text)
    text = text.replace("’", "'")
    text = text.lower()
    return unicodedata.normalize("NFC", text)


def slice_span(text: str, span: Span) -> str:
    """Slice canonical text by a byte span."""
    return text.encode("utf-8")[span.start : span.end].decode("utf-8")


def scan_graphemes(text: str) -> list[Grapheme]:
    """Longest-match scan of canonicalized text against the IAST alphabet.

    Multi-letter units (kh, dh, ai, ...) are single graphemes. Unknown
    codepoints become kind=other, never an error: partial and damaged
    texts must scan.
    """
    canonical = canonicalize(text)
    graphemes: list[Grapheme] = []
    i = 0
    byte_pos = 0
    n = len(canonical)
    while i < n:
        unit = None
        for width in range(min(_MAX_UNIT, n - i), 0, -1):
            candidate = canonical[i : i + width]
            if candidate in _ALPHABET:
                unit = candidate
                break
        if unit is None:
            unit = canonical[i]
            kind = OTHER
        else:
            kind = _ALPHABET[unit]
        nbytes = len(unit.encode("utf-8"))
        graphemes.append(Grapheme(kind, unit, Span(byte_pos, byte_pos + nbytes)))
        i += len(unit)
        byte_pos += nbytes
    return graphemes


def _build_aksara(
    cluster: list[Grapheme], nucleus: Grapheme | None, coda: Grapheme | None
) -> Aksara:
    prefix: Grapheme | None = None
    onset = cluster
    if cluster and cluster[0].kind == AVAGRAHA:
        prefix = cluster[0]
        onset = cluster[1:]
    parts = ([prefix] if prefix else []) + onset
    if nucleus is not None:
        parts = parts + [nucleus]
    if coda is not None:
        parts = parts + [coda]
    span = Span(parts[0].span.start, parts[-1].span.end)
    return Aksara(
        onset=tuple(onset), nucleus=nucleus, coda=coda, prefix=prefix, span=span
    )


def _parse_aksaras(graphemes: Iterable[Grapheme]) -> tuple[Aksara, ...]:
    stream = [g for g in graphemes if g.kind != OTHER]
    aksaras: list[Aksara] = []
    i = 0
    n = len(stream)
    while i < n:
        # Everything up to the next vowel joins the pending cluster; in
        # grammatical IAST that is avagraha? consonant*, but stray coda
        # signs also attach forward here so that tokenization is total.
        cluster: list[Grapheme] = []
        while i < n and stream[i].kind != VOWEL:
            cluster.append(stream[i])
            i += 1
        if i < n:
            nucleus = stream[i]
            i += 1
            coda = None
            if i < n and stream[i].kind in (ANUSVARA, VISARGA):
                coda = stream[i]
                i += 1
            aksaras.append(_build_aksara(cluster, nucleus, coda))
        else:
            aksaras.append(_build_aksara(cluster, None, None))
    return tuple(aksaras)


def tokenize_aksaras(text: str, document_id: str = "") -> TokenStream:
    """Tokenize text into its akṣara stream, discarding separators."""
    canonical = canonicalize(text)
    aksaras = _parse_aksaras(scan_graphemes(canonical))
    return TokenStream(
        document_id=document_id,
        aksaras=aksaras,
        text=canonical,
        source_length=len(canonical.encode("utf-8")),
    )


def tokenize_characters(text: str) -> list[Grapheme]:
    """Phonemic character sequence (separators removed); the comparison baseline."""
    return [g for g in scan_graphemes(text) if g.kind != OTHER]
