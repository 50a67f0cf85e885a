"""Side-by-side comparison of two documents with highlighted matches.

Every occurrence pairing of every shared shingle becomes a match span;
spans merge per document into disjoint ranges for highlighting. The html
export is a static page with <mark> highlights.
"""

from pathlib import Path

from aksara import NormalizationProfile, ShingleParams, compare, ingest
from aksara.aligner import render_html

manifest = Path(__file__).resolve().parent.parent / "sample_corpus" / "corpus.json"
index = ingest(manifest)
profile = NormalizationProfile.default()

report = compare(index, "raghu", "anon1", ShingleParams(n=4), profile)

print(f"{report.doc_a} vs {report.doc_b}")
print(f"jaccard {report.jaccard:.4f}, dice {report.dice:.4f}")
print("shared keys by n:", report.counts_by_n)
print("\nmatches:")
for m in report.matches:
    print(f"  {m.key:14} A[{m.span_a.start:3},{m.span_a.end:3})  B[{m.span_b.start:3},{m.span_b.end:3})")

# project merged ranges back onto the text
text = index.text("raghu")
data = text.encode("utf-8")
print(f"\n{report.doc_a}: {text.strip()!r}")
for span in report.merged_a:
    print(f"  highlighted: {data[span.start:span.end].decode('utf-8')!r}")

page = render_html(
    report,
    index.text("raghu"),
    index.text("anon1"),
    index.record("raghu").title,
    index.record("anon1").title,
)
out = Path(__file__).resolve().parent / "comparison.html"
out.write_text(page, encoding="utf-8")
print(f"\nwrote {out.name} (open in a browser)")
