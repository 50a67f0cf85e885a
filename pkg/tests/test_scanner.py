import random
import re

from hypothesis import given, settings
from hypothesis import strategies as st

import iast
from aksara import scanner
from aksara.scanner import (
    ANUSVARA,
    AVAGRAHA,
    CONSONANT,
    OTHER,
    VISARGA,
    VOWEL,
    canonicalize,
    scan_graphemes,
    slice_span,
    tokenize_aksaras,
    tokenize_characters,
)


def surfaces(text: str) -> list[str]:
    return [a.surface for a in tokenize_aksaras(text).aksaras]


# -- grapheme scanning -------------------------------------------------------


def test_two_grapheme_case():
    gs = scan_graphemes("kā")
    assert [(g.kind, g.surface) for g in gs] == [(CONSONANT, "k"), (VOWEL, "ā")]


def _all_tokenizations(text: str) -> list[list[str]]:
    """Every way to segment text into alphabet units (oracle for longest-match)."""
    if not text:
        return [[]]
    out = []
    for width in (1, 2):
        if len(text) < width:
            continue
        unit = text[:width]
        if unit in scanner._ALPHABET:
            out.extend([unit] + rest for rest in _all_tokenizations(text[width:]))
    return out


def test_longest_match_khai():
    candidates = _all_tokenizations("khai")
    assert sorted(candidates) == sorted(
        [["k", "h", "a", "i"], ["kh", "a", "i"], ["k", "h", "ai"], ["kh", "ai"]]
    )
    result = [g.surface for g in scan_graphemes("khai")]
    assert result in candidates
    assert result == ["kh", "ai"]


def test_aksarah_karta_graphemes():
    gs = scan_graphemes("akṣaraḥ kartā")
    assert [g.surface for g in gs] == [
        "a", "k", "ṣ", "a", "r", "a", "ḥ", " ", "k", "a", "r", "t", "ā",
    ]
    kinds = [g.kind for g in gs]
    assert kinds[7] == OTHER
    assert kinds.count(OTHER) == 1


def test_unknown_characters_never_fail():
    gs = scan_graphemes("k@3ā中")
    assert [g.kind for g in gs] == [CONSONANT, OTHER, OTHER, VOWEL, OTHER]


def test_every_codepoint_covered():
    text = canonicalize("śrī: 42 (namaḥ)")
    gs = scan_graphemes(text)
    assert "".join(g.surface for g in gs) == text


def test_multi_letter_units_are_single_graphemes():
    for unit in ("kh", "gh", "ch", "jh", "ṭh", "ḍh", "th", "dh", "ph", "bh", "ai", "au"):
        gs = scan_graphemes(unit)
        assert len(gs) == 1 and gs[0].surface == unit


def test_candrabindu_is_anusvara_kind():
    gs = scan_graphemes("am̐")
    assert [g.kind for g in gs] == [VOWEL, ANUSVARA]


# -- akṣara tokenization -----------------------------------------------------


def test_aksarah_karta():
    assert surfaces("akṣaraḥ kartā") == ["a", "kṣa", "raḥ", "ka", "rtā"]


def test_yasya_jya():
    assert surfaces("yasya jyā parameśvarāce") == [
        "ya", "sya", "jyā", "pa", "ra", "me", "śva", "rā", "ce",
    ]


def test_trailing_degenerate():
    stream = tokenize_aksaras("tat")
    assert [a.surface for a in stream.aksaras] == ["ta", "t"]
    assert [a.degenerate for a in stream.aksaras] == [False, True]


def test_avagraha_prefix():
    stream = tokenize_aksaras("ihānukto 'pi buddho viśe")
    assert [a.surface for a in stream.aksaras] == [
        "i", "hā", "nu", "kto", "'pi", "bu", "ddho", "vi", "śe",
    ]
    pi = stream.aksaras[4]
    assert pi.prefix is not None and pi.prefix.kind == AVAGRAHA


def test_cluster_attaches_forward_across_separators():
    assert surfaces("tat tvam") == ["ta", "ttva", "m"]


def test_empty_input():
    stream = tokenize_aksaras("")
    assert stream.aksaras == ()
    assert stream.source_length == 0


def test_typographic_apostrophe_is_avagraha():
    assert surfaces("ihānukto ’pi") == ["i", "hā", "nu", "kto", "'pi"]


def test_uppercase_folded():
    assert surfaces("AKṢARAḤ KARTĀ") == surfaces("akṣaraḥ kartā")


def test_precomposed_and_decomposed_agree():
    composed = tokenize_aksaras("kartā")
    decomposed = tokenize_aksaras("kartā")
    assert composed.surfaces() == decomposed.surfaces()
    assert [a.span for a in composed.aksaras] == [a.span for a in decomposed.aksaras]


# -- character tokenization --------------------------------------------------


def test_characters_worked_phrase():
    chars = [g.surface for g in tokenize_characters("akṣaraḥ kartā")]
    assert chars == ["a", "k", "ṣ", "a", "r", "a", "ḥ", "k", "a", "r", "t", "ā"]


def test_characters_empty():
    assert tokenize_characters("") == []


def test_characters_ke():
    assert [g.surface for g in tokenize_characters("kē")] == ["k", "ē"]


# -- invariants --------------------------------------------------------------

_CONS_ALT = "|".join(sorted(scanner.CONSONANTS, key=len, reverse=True))
_VOWEL_ALT = "|".join(sorted(scanner.VOWELS, key=len, reverse=True))
_CODA_ALT = "|".join(scanner.ANUSVARAS + scanner.VISARGAS)
AKSARA_PATTERN = re.compile(f"^'?({_CONS_ALT})*({_VOWEL_ALT})({_CODA_ALT})?$")


def check_stream_invariants(text: str) -> None:
    stream = tokenize_aksaras(text)
    canonical = stream.text
    graphemes = scan_graphemes(canonical)
    non_sep = [g for g in graphemes if g.kind != OTHER]

    # round-trip: surfaces reproduce the source minus separators
    assert "".join(a.surface for a in stream.aksaras) == "".join(
        g.surface for g in non_sep
    )
    # partition: every non-separator grapheme lands in exactly one akṣara
    flat = [g for a in stream.aksaras for g in a.graphemes]
    assert flat == non_sep
    # spans strictly increasing, non-overlapping
    for prev, cur in zip(stream.aksaras, stream.aksaras[1:]):
        assert prev.span.end <= cur.span.start
    # provenance: per-grapheme spans slice back to their surfaces
    for a in stream.aksaras:
        assert "".join(slice_span(canonical, g.span) for g in a.graphemes) == a.surface
    # degenerate only final
    for a in stream.aksaras[:-1]:
        assert not a.degenerate
    # akṣara count never exceeds character count
    assert len(stream.aksaras) <= len(non_sep)


@given(st.integers(min_value=0, max_value=2**32 - 1))
@settings(max_examples=300, deadline=None)
def test_invariants_on_fuzzed_text(seed):
    rng = random.Random(seed)
    check_stream_invariants(iast.random_fuzzed_text(rng))


@given(st.integers(min_value=0, max_value=2**32 - 1))
@settings(max_examples=300, deadline=None)
def test_surface_pattern_on_grammatical_text(seed):
    rng = random.Random(seed)
    stream = tokenize_aksaras(iast.random_grammatical_text(rng))
    for a in stream.aksaras:
        if not a.degenerate:
            assert AKSARA_PATTERN.match(a.surface), a.surface


@given(st.text(max_size=30))
@settings(max_examples=300, deadline=None)
def test_total_on_arbitrary_unicode(text):
    check_stream_invariants(text)


def test_provenance_slices_without_separators():
    stream = tokenize_aksaras("akṣaraḥ")
    for a in stream.aksaras:
        assert slice_span(stream.text, a.span) == a.surface
