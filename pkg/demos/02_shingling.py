"""Shingle sets: contiguous, fuzzy and skip n-akṣaras.

A document is modelled as the set of its n-grams over akṣaras. Fuzzy
grams mask the vowels of window positions 3..n so inflected endings
still match; skip grams ride over inflectional suffixes entirely.
"""

from aksara import (
    NormalizationProfile,
    contiguous_shingles,
    fuzzy_shingles,
    normalize,
    skip_shingles,
    tokenize_aksaras,
)

profile = NormalizationProfile.default()


def stream(text):
    return normalize(tokenize_aksaras(text), profile)


# contiguous n-akṣaras of two commentary phrases on the same verse
a = stream("ihānukto 'pi buddho viśe")
b = stream("atrānukto pi budho viśe")
sa, sb = contiguous_shingles(a, 4), contiguous_shingles(b, 4)
print("A 4-grams:", sorted(sa.keys))
print("B 4-grams:", sorted(sb.keys))
print("shared:   ", sorted(sa.keys & sb.keys))

# normalization is what makes them match: gemination (ddho/dho) and the
# avagraha are folded away before shingling
raw = contiguous_shingles(tokenize_aksaras("ihānukto 'pi buddho viśe"), 4)
print("\nwithout normalization:", sorted(raw.keys))

# fuzzy grams: a Sanskrit and a Malayalam gloss differing only in the
# final vowel of the window still produce one shared masked key
c = stream("śriye saṃpataye")
d = stream("śrī sanpattū")
fc, fd = fuzzy_shingles(c, 3), fuzzy_shingles(d, 3)
print("\nfuzzy 3-grams:", sorted(fc.keys), "vs", sorted(fd.keys))
print("shared masked key:", sorted(fc.keys & fd.keys))

# skip grams match stem sequences across languages without stemming:
# Hindi drops the Sanskrit case endings, so skipping one akṣara aligns them
hindi = stream("satya śauca dayā kṣāṃti tyāga ādi")
sanskrit = stream("satyaṃ śaucaṃ dayā kṣāṃtiḥ tyāgaḥ")
kh = skip_shingles(hindi, 2, 1)
ks = skip_shingles(sanskrit, 2, 1)
print("\nskip 1-skip-2-grams shared:", sorted(kh.keys & ks.keys))
