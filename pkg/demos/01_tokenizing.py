"""Tokenizing IAST text into akṣaras and characters.

An akṣara is the orthographic syllable: optional consonant cluster,
one vowel, optional anusvāra/visarga. Word boundaries do not matter --
the whole document is one continuous syllable stream.
"""

from aksara import scan_graphemes, tokenize_aksaras, tokenize_characters

phrase = "akṣaraḥ kartā"

# the two tokenizations of the same phrase
stream = tokenize_aksaras(phrase)
print("akṣaras:   ", " ".join(a.surface for a in stream.aksaras))
print("characters:", " ".join(g.surface for g in tokenize_characters(phrase)))

# every akṣara carries a byte span back into the source text
print("\nprovenance:")
for a in stream.aksaras:
    print(f"  {a.surface!r:10} bytes [{a.span.start:2}, {a.span.end:2})")

# clusters attach forward across word boundaries; a trailing cluster
# with no vowel to attach to becomes a degenerate akṣara
for text in ("tat tvam", "ihānukto 'pi buddho viśe"):
    s = tokenize_aksaras(text)
    flags = ["(degenerate)" if a.degenerate else "" for a in s.aksaras]
    print(f"\n{text!r}")
    print(" ", " ".join(a.surface + f for a, f in zip(s.aksaras, flags)))

# damaged fragments tokenize without emendation
fragment = "śritvabhāvaka"
print(f"\n{fragment!r} ->", " ".join(a.surface for a in tokenize_aksaras(fragment).aksaras))

# unknown characters never fail the scan; they become separators
noisy = "śrī… [42] namaḥ"
kinds = [(g.surface, g.kind) for g in scan_graphemes(noisy)]
print(f"\n{noisy!r} grapheme kinds:")
print(" ", kinds)
