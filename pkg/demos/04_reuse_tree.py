"""Clustering the corpus with a minimum spanning tree.

Edge weight is 1 - Dice, so the tree keeps the most similar documents
adjacent: families of texts appear as branches. Exports are stable byte
for byte, with ties broken by document-id pair order.
"""

from pathlib import Path

from aksara import (
    NormalizationProfile,
    ShingleParams,
    export_graph,
    ingest,
    minimum_spanning_tree,
    similarity_matrix,
)

manifest = Path(__file__).resolve().parent.parent / "sample_corpus" / "corpus.json"
index = ingest(manifest)

matrix = similarity_matrix(
    index, ShingleParams(n=4), NormalizationProfile.default(), metric="dice"
)
tree = minimum_spanning_tree(matrix, index.records)

print(f"{len(tree.nodes)} nodes, {len(tree.edges)} edges\n")
for e in sorted(tree.edges, key=lambda e: e.weight):
    print(f"  {e.a:10} -- {e.b:10}  similarity={e.similarity:.4f}")

out_dir = Path(__file__).resolve().parent
(out_dir / "tree.json").write_text(export_graph(tree, "json"), encoding="utf-8")
(out_dir / "tree.dot").write_text(export_graph(tree, "dot"), encoding="utf-8")
print("\nwrote tree.json and tree.dot (render with: dot -Tsvg tree.dot)")
