"""Shingle sets: contiguous, fuzzy and skip n-akṣara grams.

A document is modelled as the SET of its n-grams over akṣaras (or, as a
baseline, over phonemic characters). Fuzzy mode masks the vowel nucleus
of every window position after the second, so inflectional vowel changes
at the tail of a window do not break a match; skip mode admits up to k
skipped akṣaras between selected positions, which rides over suffixes.
Occurrence positions are kept alongside the key set so matches can be
projected back to source spans.
"""

from __future__ import annotations

from dataclasses import dataclass

from aksara.scanner import Aksara, TokenStream, tokenize_characters

CONTIGUOUS = "contiguous"
FUZZY = "fuzzy"
SKIP = "skip"
MODES = (CONTIGUOUS, FUZZY, SKIP)

UNIT_AKSARA = "aksara"
UNIT_CHARACTER = "character"
UNITS = (UNIT_AKSARA, UNIT_CHARACTER)

# Outside the IAST alphabet, so masked keys can never collide with a surface.
MASK = "•"


class ShingleParamError(ValueError):
    """Invalid or mismatched shingle parameters."""

    def __init__(self, message: str, field: str = "params") -> None:
        super().__init__(message)
        self.field = field


@dataclass(frozen=True)
class ShingleParams:
    """One parameter bundle: gram size, windowing mode, skip distance, unit."""

    n: int = 4
    mode: str = CONTIGUOUS
    k: int = 0
    unit: str = UNIT_AKSARA

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 1:
            raise ShingleParamError(f"n must be an integer >= 1, got {self.n!r}", "n")
        if self.mode not in MODES:
            raise ShingleParamError(f"mode must be one of {MODES}, got {self.mode!r}", "mode")
        if self.unit not in UNITS:
            raise ShingleParamError(f"unit must be one of {UNITS}, got {self.unit!r}", "unit")
        if self.mode == FUZZY and self.n < 3:
            raise ShingleParamError("fuzzy mode needs n >= 3 (no vowels to mask below)", "n")
        if self.mode == SKIP and self.k < 1:
            raise ShingleParamError("skip mode needs k >= 1", "k")
        if self.mode != SKIP and self.k != 0:
            raise ShingleParamError("k is only meaningful for skip mode", "k")
        if self.unit == UNIT_CHARACTER and self.mode != CONTIGUOUS:
            raise ShingleParamError("character unit permits only contiguous mode", "unit")

    def cache_token(self) -> str:
        return f"n{self.n}-{self.mode}-k{self.k}-{self.unit}"


@dataclass(frozen=True)
class ShingleSet:
    """The shingle keys of one document under one parameter bundle.

    keys is a true set (duplicate windows collapse); occurrences maps each
    key to every position tuple that produced it, indices into the token
    stream the set was built from.
    """

    document_id: str
    params: ShingleParams
    keys: frozenset[str]
    occurrences: dict[str, tuple[tuple[int, ...], ...]]

    def __len__(self) -> int:
        return len(self.keys)


def _mask_surface(aksara: Aksara) -> str:
    """Surface with the nucleus vowel replaced by the mask symbol."""
    if aksara.nucleus is None:
        return aksara.surface
    parts = []
    if aksara.prefix is not None:
        parts.append(aksara.prefix.surface)
    parts.extend(g.surface for g in aksara.onset)
    parts.append(MASK)
    if aksara.coda is not None:
        parts.append(aksara.coda.surface)
    return "".join(parts)


def mask_window(window: tuple[Aksara, ...]) -> str:
    """Fuzzy key for one window: positions past the second lose their vowel."""
    return "".join(
        a.surface if pos < 2 else _mask_surface(a) for pos, a in enumerate(window)
    )


def _collect(
    document_id: str,
    params: ShingleParams,
    entries: list[tuple[str, tuple[int, ...]]],
) -> ShingleSet:
    occurrences: dict[str, list[tuple[int, ...]]] = {}
    for key, positions in entries:
        occurrences.setdefault(key, []).append(positions)
    return ShingleSet(
        document_id=document_id,
        params=params,
        keys=frozenset(occurrences),
        occurrences={k: tuple(v) for k, v in occurrences.items()},
    )


def contiguous_shingles(stream: TokenStream, n: int) -> ShingleSet:
    """Every window of n consecutive akṣaras, keyed by concatenated surfaces."""
    params = ShingleParams(n=n, mode=CONTIGUOUS)
    aksaras = stream.aksaras
    entries = [
        ("".join(a.surface for a in aksaras[i : i + n]), tuple(range(i, i + n)))
        for i in range(len(aksaras) - n + 1)
    ]
    return _collect(stream.document_id, params, entries)


def fuzzy_shingles(stream: TokenStream, n: int) -> ShingleSet:
    """Contiguous windows with the nucleus vowels of positions 3..n masked."""
    params = ShingleParams(n=n, mode=FUZZY)
    aksaras = stream.aksaras
    entries = [
        (mask_window(aksaras[i : i + n]), tuple(range(i, i + n)))
        for i in range(len(aksaras) - n + 1)
    ]
    return _collect(stream.document_id, params, entries)


def _skip_positions(length: int, n: int, k: int) -> list[tuple[int, ...]]:
    """All n-subsequences whose consecutive indices differ by at most k+1."""
    out: list[tuple[int, ...]] = []

    def extend(chosen: list[int]) -> None:
        if len(chosen) == n:
            out.append(tuple(chosen))
            return
        last = chosen[-1]
        for nxt in range(last + 1, min(last + k + 2, length)):
            chosen.append(nxt)
            extend(chosen)
            chosen.pop()

    for start in range(length):
        extend([start])
    return out


def skip_shingles(stream: TokenStream, n: int, k: int) -> ShingleSet:
    """k-skip-n-grams; the contiguous n-grams are the zero-skip subset."""
    params = ShingleParams(n=n, mode=SKIP, k=k)
    aksaras = stream.aksaras
    entries = [
        ("".join(aksaras[i].surface for i in positions), positions)
        for positions in _skip_positions(len(aksaras), n, k)
    ]
    return _collect(stream.document_id, params, entries)


def character_shingles(text: str, n: int, document_id: str = "") -> ShingleSet:
    """Contiguous n-grams over phonemic characters; the baseline model."""
    params = ShingleParams(n=n, mode=CONTIGUOUS, unit=UNIT_CHARACTER)
    chars = tokenize_characters(text)
    entries = [
        ("".join(g.surface for g in chars[i : i + n]), tuple(range(i, i + n)))
        for i in range(len(chars) - n + 1)
    ]
    return _collect(document_id, params, entries)


def shingles(stream: TokenStream, params: ShingleParams) -> ShingleSet:
    """Dispatch on params; character unit shingles the stream's source text."""
    if params.unit == UNIT_CHARACTER:
        return character_shingles(stream.text, params.n, stream.document_id)
    if params.mode == CONTIGUOUS:
        return contiguous_shingles(stream, params.n)
    if params.mode == FUZZY:
        return fuzzy_shingles(stream, params.n)
    return skip_shingles(stream, params.n, params.k)
