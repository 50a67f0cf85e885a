"""Orthographic normalization of akṣara streams.

Regional spelling variants (consonant gemination, avagraha, nasal vs.
anusvāra, Dravidian long e/o) are rewritten to a common form before
shingling so that parallel passages match across scripts and languages.
Normalization touches surfaces only: every akṣara keeps its original
source span, so matches still project back onto the text as written.
"""

from __future__ import annotations

from dataclasses import dataclass

from aksara.scanner import (
    ANUSVARA,
    CONSONANT,
    Aksara,
    Grapheme,
    Span,
    TokenStream,
)

STRIP_AVAGRAHA = "strip-avagraha"
DEGEMINATE = "degeminate"
NASAL_TO_ANUSVARA = "nasal-to-anusvara"
FOLD_DRAVIDIAN_VOWELS = "fold-dravidian-vowels"
FOLD_ANUSVARA_VARIANTS = "fold-anusvara-variants"
MERGE_B_V = "merge-b-v"

# Pipeline order is canonical: a profile only switches rules on or off.
RULE_ORDER = (
    STRIP_AVAGRAHA,
    DEGEMINATE,
    NASAL_TO_ANUSVARA,
    FOLD_DRAVIDIAN_VOWELS,
    FOLD_ANUSVARA_VARIANTS,
    MERGE_B_V,
)

# Unaspirated stop -> its aspirate; degemination collapses C C and C Ch.
_ASPIRATE = {
    "k": "kh", "g": "gh", "c": "ch", "j": "jh",
    "ṭ": "ṭh", "ḍ": "ḍh", "t": "th", "d": "dh",
    "p": "ph", "b": "bh",
}
_NASALS = frozenset({"n", "ṇ", "ṅ", "ñ", "m"})
_VOWEL_FOLDS = {"ē": "e", "ō": "o"}
_ANUSVARA_FOLDS = {"ṁ": "ṃ", "m̐": "ṃ"}


@dataclass(frozen=True)
class NormalizationProfile:
    """Which rules are on. Vowel length is deliberately never normalized."""

    rules: frozenset[str] = frozenset()

    def __post_init__(self) -> None:
        unknown = self.rules - set(RULE_ORDER)
        if unknown:
            raise ValueError(f"unknown normalization rules: {sorted(unknown)}")

    @classmethod
    def of(cls, *rules: str) -> "NormalizationProfile":
        return cls(rules=frozenset(rules))

    @classmethod
    def default(cls) -> "NormalizationProfile":
        """All rules except merge-b-v, which stays opt-in."""
        return cls.of(
            STRIP_AVAGRAHA,
            DEGEMINATE,
            NASAL_TO_ANUSVARA,
            FOLD_DRAVIDIAN_VOWELS,
            FOLD_ANUSVARA_VARIANTS,
        )

    @classmethod
    def none(cls) -> "NormalizationProfile":
        return cls()

    def enabled(self, rule: str) -> bool:
        return rule in self.rules

    def ordered_rules(self) -> tuple[str, ...]:
        return tuple(r for r in RULE_ORDER if r in self.rules)

    def cache_token(self) -> str:
        """Stable string form for cache keys and file names."""
        return ",".join(self.ordered_rules()) or "off"


def _resurface(g: Grapheme, surface: str) -> Grapheme:
    return Grapheme(g.kind, surface, g.span)


def _strip_avagraha(aksara: Aksara) -> Aksara:
    if aksara.prefix is None:
        return aksara
    # The host akṣara's span still covers the deleted sign's bytes.
    return Aksara(
        onset=aksara.onset,
        nucleus=aksara.nucleus,
        coda=aksara.coda,
        prefix=None,
        span=aksara.span,
    )


def _degeminate_onset(onset: tuple[Grapheme, ...]) -> tuple[Grapheme, ...]:
    out: list[Grapheme] = []
    for g in onset:
        if out and g.kind == CONSONANT and out[-1].kind == CONSONANT:
            prev = out[-1].surface
            # C C or C Ch with the same stop base collapses to the final
            # member; triples collapse left to right (ttt -> t).
            if prev in _ASPIRATE and g.surface in (prev, _ASPIRATE[prev]):
                out.pop()
        out.append(g)
    return tuple(out)


def _degeminate(aksara: Aksara) -> Aksara:
    onset = _degeminate_onset(aksara.onset)
    if onset == aksara.onset:
        return aksara
    return Aksara(
        onset=onset,
        nucleus=aksara.nucleus,
        coda=aksara.coda,
        prefix=aksara.prefix,
        span=aksara.span,
    )


def _nasal_to_anusvara(aksaras: list[Aksara]) -> list[Aksara]:
    """Move an onset-initial nasal that closes the previous syllable.

    sa | npa -> saṃ | pa: the nasal opens no syllable of its own (another
    consonant follows it), so it is rewritten as anusvāra coda on the
    preceding akṣara. Skipped when the previous akṣara already has a coda
    or no nucleus, or when an avagraha prefix intervenes.
    """
    out: list[Aksara] = []
    for aksara in aksaras:
        movable = (
            out
            and aksara.prefix is None
            and len(aksara.onset) >= 2
            and aksara.onset[0].kind == CONSONANT
            and aksara.onset[0].surface in _NASALS
            and out[-1].nucleus is not None
            and out[-1].coda is None
        )
        if movable:
            nasal = aksara.onset[0]
            prev = out[-1]
            out[-1] = Aksara(
                onset=prev.onset,
                nucleus=prev.nucleus,
                coda=Grapheme(ANUSVARA, "ṃ", nasal.span),
                prefix=prev.prefix,
                span=prev.span,
            )
            aksara = Aksara(
                onset=aksara.onset[1:],
                nucleus=aksara.nucleus,
                coda=aksara.coda,
                prefix=aksara.prefix,
                span=aksara.span,
            )
        out.append(aksara)
    return out


def _map_surfaces(aksara: Aksara, table: dict[str, str]) -> Aksara:
    def conv(g: Grapheme | None) -> Grapheme | None:
        if g is None or g.surface not in table:
            return g
        return _resurface(g, table[g.surface])

    onset = tuple(conv(g) for g in aksara.onset)
    nucleus = conv(aksara.nucleus)
    coda = conv(aksara.coda)
    prefix = conv(aksara.prefix)
    if (onset, nucleus, coda, prefix) == (
        aksara.onset,
        aksara.nucleus,
        aksara.coda,
        aksara.prefix,
    ):
        return aksara
    return Aksara(onset=onset, nucleus=nucleus, coda=coda, prefix=prefix, span=aksara.span)


def normalize(stream: TokenStream, profile: NormalizationProfile) -> TokenStream:
    """Apply the profile's rules, in canonical order, to every akṣara.

    Returns a new stream; akṣara count and source spans are preserved
    (nasal-to-anusvara moves a nasal between neighbours, never deletes).
    """
    aksaras = list(stream.aksaras)
    for rule in profile.ordered_rules():
        if rule == STRIP_AVAGRAHA:
            aksaras = [_strip_avagraha(a) for a in aksaras]
        elif rule == DEGEMINATE:
            aksaras = [_degeminate(a) for a in aksaras]
        elif rule == NASAL_TO_ANUSVARA:
            aksaras = _nasal_to_anusvara(aksaras)
        elif rule == FOLD_DRAVIDIAN_VOWELS:
            aksaras = [_map_surfaces(a, _VOWEL_FOLDS) for a in aksaras]
        elif rule == FOLD_ANUSVARA_VARIANTS:
            aksaras = [_map_surfaces(a, _ANUSVARA_FOLDS) for a in aksaras]
        elif rule == MERGE_B_V:
            aksaras = [_map_surfaces(a, {"b": "v"}) for a in aksaras]
    return TokenStream(
        document_id=stream.document_id,
        aksaras=tuple(aksaras),
        text=stream.text,
        source_length=stream.source_length,
    )
