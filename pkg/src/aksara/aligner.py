"""Pairwise alignment: shared shingles projected back to source spans.

Every occurrence pairing of every shared key becomes a MatchSpan (a
gloss repeated three times should highlight three times), and the spans
per document are merged into sorted disjoint ranges for side-by-side
highlighted display. Counts of shared keys are reported for n = 2..5 so
a reader can see how match density falls off with gram size.
"""

from __future__ import annotations

import html
from dataclasses import dataclass

from aksara.normalizer import NormalizationProfile
from aksara.scanner import Span, TokenStream
from aksara.shingler import (
    CONTIGUOUS,
    FUZZY,
    SKIP,
    ShingleParamError,
    ShingleParams,
    ShingleSet,
)
from aksara.similarity import dice, jaccard

COUNT_NS = (2, 3, 4, 5)


def shared_shingles(a: ShingleSet, b: ShingleSet) -> frozenset[str]:
    """Exact key intersection; params must match."""
    if a.params != b.params:
        raise ShingleParamError(
            f"cannot intersect shingle sets with different params: "
            f"{a.params} vs {b.params}"
        )
    return a.keys & b.keys


@dataclass(frozen=True)
class MatchSpan:
    """One occurrence pairing of a shared key, as byte ranges in both texts.

    span_a/span_b cover the whole occurrence; segments_* list the ranges
    of the selected akṣaras only, one per contiguous run, so skip-mode
    highlighting leaves skipped akṣaras unmarked. For contiguous windows
    the segments are exactly [span].
    """

    key: str
    n: int
    span_a: Span
    span_b: Span
    segments_a: tuple[Span, ...]
    segments_b: tuple[Span, ...]


@dataclass
class ComparisonReport:
    """Everything needed to render a highlighted two-document comparison."""

    doc_a: str
    doc_b: str
    params: ShingleParams
    profile: NormalizationProfile
    matches: tuple[MatchSpan, ...]
    merged_a: tuple[Span, ...]
    merged_b: tuple[Span, ...]
    counts_by_n: dict[int, int]
    set_sizes_by_n: dict[int, tuple[int, int]]
    jaccard: float
    dice: float


def _segments(stream: TokenStream, positions: tuple[int, ...]) -> tuple[Span, ...]:
    """Covering span per contiguous run of selected akṣara indices."""
    runs: list[list[int]] = [[positions[0]]]
    for idx in positions[1:]:
        if idx == runs[-1][-1] + 1:
            runs[-1].append(idx)
        else:
            runs.append([idx])
    return tuple(
        Span(stream.aksaras[run[0]].span.start, stream.aksaras[run[-1]].span.end)
        for run in runs
    )


def merge_spans(spans: list[Span]) -> tuple[Span, ...]:
    """Union of byte ranges as sorted disjoint ranges (adjacent runs fuse)."""
    out: list[Span] = []
    for span in sorted(spans):
        if out and span.start <= out[-1].end:
            out[-1] = Span(out[-1].start, max(out[-1].end, span.end))
        else:
            out.append(span)
    return tuple(out)


def _params_for_n(params: ShingleParams, n: int) -> ShingleParams:
    # The counts strip covers n=2 even in fuzzy mode: masking n-2 = 0
    # vowels is the identity, so contiguous stands in below n=3.
    mode = params.mode
    if mode == FUZZY and n < 3:
        mode = CONTIGUOUS
    k = params.k if mode == SKIP else 0
    return ShingleParams(n=n, mode=mode, k=k, unit=params.unit)


def compare(
    index,
    doc_a: str,
    doc_b: str,
    params: ShingleParams,
    profile: NormalizationProfile,
) -> ComparisonReport:
    """Shared shingles of two ingested documents, with source-span matches."""
    set_a = index.shingles(doc_a, params, profile)
    set_b = index.shingles(doc_b, params, profile)
    stream_a = index.normalized(doc_a, profile)
    stream_b = index.normalized(doc_b, profile)
    shared = shared_shingles(set_a, set_b)

    matches: list[MatchSpan] = []
    for key in sorted(shared):
        for pos_a in set_a.occurrences[key]:
            for pos_b in set_b.occurrences[key]:
                seg_a = _segments(stream_a, pos_a)
                seg_b = _segments(stream_b, pos_b)
                matches.append(
                    MatchSpan(
                        key=key,
                        n=params.n,
                        span_a=Span(seg_a[0].start, seg_a[-1].end),
                        span_b=Span(seg_b[0].start, seg_b[-1].end),
                        segments_a=seg_a,
                        segments_b=seg_b,
                    )
                )

    merged_a = merge_spans([s for m in matches for s in m.segments_a])
    merged_b = merge_spans([s for m in matches for s in m.segments_b])

    counts_by_n: dict[int, int] = {}
    sizes_by_n: dict[int, tuple[int, int]] = {}
    for n in COUNT_NS:
        p = _params_for_n(params, n)
        sa = index.shingles(doc_a, p, profile)
        sb = index.shingles(doc_b, p, profile)
        counts_by_n[n] = len(sa.keys & sb.keys)
        sizes_by_n[n] = (len(sa.keys), len(sb.keys))

    return ComparisonReport(
        doc_a=doc_a,
        doc_b=doc_b,
        params=params,
        profile=profile,
        matches=tuple(matches),
        merged_a=merged_a,
        merged_b=merged_b,
        counts_by_n=counts_by_n,
        set_sizes_by_n=sizes_by_n,
        jaccard=jaccard(set_a, set_b),
        dice=dice(set_a, set_b),
    )


def report_to_dict(report: ComparisonReport) -> dict:
    return {
        "docA": report.doc_a,
        "docB": report.doc_b,
        "params": {
            "n": report.params.n,
            "mode": report.params.mode,
            "k": report.params.k,
            "unit": report.params.unit,
        },
        "profile": list(report.profile.ordered_rules()),
        "jaccard": report.jaccard,
        "dice": report.dice,
        "matches": [
            {
                "key": m.key,
                "n": m.n,
                "spanA": list(m.span_a),
                "spanB": list(m.span_b),
                "segmentsA": [list(s) for s in m.segments_a],
                "segmentsB": [list(s) for s in m.segments_b],
            }
            for m in report.matches
        ],
        "mergedA": [list(s) for s in report.merged_a],
        "mergedB": [list(s) for s in report.merged_b],
        "countsByN": {str(n): c for n, c in sorted(report.counts_by_n.items())},
        "setSizesByN": {
            str(n): list(sizes) for n, sizes in sorted(report.set_sizes_by_n.items())
        },
    }


def _highlighted(text: str, merged: tuple[Span, ...]) -> str:
    """HTML for one pane: merged ranges wrapped in <mark>."""
    data = text.encode("utf-8")
    pieces: list[str] = []
    cursor = 0
    for span in merged:
        pieces.append(html.escape(data[cursor : span.start].decode("utf-8")))
        pieces.append(
            "<mark>" + html.escape(data[span.start : span.end].decode("utf-8")) + "</mark>"
        )
        cursor = span.end
    pieces.append(html.escape(data[cursor:].decode("utf-8")))
    return "".join(pieces)


def render_html(
    report: ComparisonReport,
    text_a: str,
    text_b: str,
    title_a: str = "",
    title_b: str = "",
) -> str:
    """Static two-column page with matches highlighted, desk-verifiable."""
    counts = " &nbsp; ".join(
        f"{n}-akṣaras: {report.counts_by_n[n]}" for n in sorted(report.counts_by_n)
    )
    return f"""<!doctype html>
<html>
<head>
<meta charset="utf-8">
<title>{html.escape(report.doc_a)} vs {html.escape(report.doc_b)}</title>
<style>
body {{ font-family: Georgia, serif; margin: 2rem; }}
.counts {{ color: #555; margin-bottom: 1rem; }}
.panes {{ display: flex; gap: 2rem; }}
.pane {{ flex: 1; border: 1px solid #ccc; padding: 1rem; white-space: pre-wrap; }}
mark {{ background: #ffe08a; }}
h2 {{ font-size: 1rem; }}
</style>
</head>
<body>
<div class="counts">{counts} &nbsp; jaccard: {report.jaccard:.6f} &nbsp; dice: {report.dice:.6f}</div>
<div class="panes">
<div class="pane"><h2>{html.escape(title_a or report.doc_a)}</h2>{_highlighted(text_a, report.merged_a)}</div>
<div class="pane"><h2>{html.escape(title_b or report.doc_b)}</h2>{_highlighted(text_b, report.merged_b)}</div>
</div>
</body>
</html>
"""


def recompute_metrics(report: ComparisonReport, n: int) -> tuple[float, float]:
    """Jaccard and Dice re-derived from the report's counts for one n."""
    shared = report.counts_by_n[n]
    size_a, size_b = report.set_sizes_by_n[n]
    union = size_a + size_b - shared
    j = shared / union if union else 0.0
    d = 2 * shared / (size_a + size_b) if (size_a + size_b) else 0.0
    return j, d
