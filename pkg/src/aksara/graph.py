"""Reuse tree: deterministic minimum spanning tree over the corpus.

Edge weight is 1 - similarity, so the MST keeps the most similar pairs
adjacent (an MST over raw similarity would do the opposite). Kruskal
with explicit tie-breaking by lexicographic (smaller-id, larger-id) pair
makes the tree, and its exports, reproducible byte for byte: real
corpora do produce equal Dice values.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from aksara.similarity import SimilarityMatrix

JSON_FORMAT = "json"
DOT_FORMAT = "dot"
FORMATS = (JSON_FORMAT, DOT_FORMAT)


@dataclass(frozen=True)
class TreeNode:
    document_id: str
    label: str = ""
    language: str = ""
    group: int = 0


@dataclass(frozen=True)
class TreeEdge:
    a: str
    b: str
    weight: float
    similarity: float


@dataclass(frozen=True)
class ReuseTree:
    """MST node/edge lists; edge count = node count - 1 (complete graph)."""

    nodes: tuple[TreeNode, ...]
    edges: tuple[TreeEdge, ...]
    params: dict = field(default_factory=dict)


class _UnionFind:
    def __init__(self, items) -> None:
        self.parent = {x: x for x in items}

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[ra] = rb
        return True


def minimum_spanning_tree(
    matrix: SimilarityMatrix,
    records: dict | None = None,
) -> ReuseTree:
    """Kruskal over the complete graph with weight = 1 - similarity.

    records, when given, maps document id to an object with title/language
    attributes used for node labels and colour groups.
    """
    ids = matrix.document_ids
    if len(ids) == 0:
        raise ValueError("cannot build a spanning tree over an empty matrix")

    languages = sorted(
        {getattr(records[i], "language", "") if records and i in records else "" for i in ids}
    )
    group_of = {lang: idx for idx, lang in enumerate(languages)}

    def node(doc_id: str) -> TreeNode:
        rec = records.get(doc_id) if records else None
        label = getattr(rec, "title", "") or doc_id
        language = getattr(rec, "language", "") if rec else ""
        return TreeNode(
            document_id=doc_id, label=label, language=language, group=group_of[language]
        )

    nodes = tuple(node(doc_id) for doc_id in sorted(ids))

    index_of = {doc_id: i for i, doc_id in enumerate(ids)}
    candidates = []
    for a in sorted(ids):
        for b in sorted(ids):
            if a >= b:
                continue
            sim = float(matrix.values[index_of[a], index_of[b]])
            candidates.append((1.0 - sim, a, b, sim))
    # Sorting on (weight, a, b) pins the choice among equal-weight edges.
    candidates.sort()

    uf = _UnionFind(ids)
    edges = []
    for weight, a, b, sim in candidates:
        if uf.union(a, b):
            edges.append(TreeEdge(a=a, b=b, weight=weight, similarity=sim))
            if len(edges) == len(ids) - 1:
                break
    edges.sort(key=lambda e: (e.a, e.b))

    params = {
        "metric": matrix.metric,
        "n": matrix.params.n,
        "mode": matrix.params.mode,
        "k": matrix.params.k,
        "unit": matrix.params.unit,
        "profile": list(matrix.profile.ordered_rules()),
        "combine": matrix.combine,
    }
    return ReuseTree(nodes=nodes, edges=tuple(edges), params=params)


def tree_to_dict(tree: ReuseTree) -> dict:
    return {
        "nodes": [
            {
                "id": n.document_id,
                "label": n.label,
                "language": n.language,
                "group": n.group,
            }
            for n in tree.nodes
        ],
        "edges": [
            {"a": e.a, "b": e.b, "weight": e.weight, "similarity": e.similarity}
            for e in sorted(tree.edges, key=lambda e: (e.a, e.b))
        ],
        "params": tree.params,
    }


def tree_from_dict(data: dict) -> ReuseTree:
    nodes = tuple(
        TreeNode(
            document_id=n["id"],
            label=n.get("label", ""),
            language=n.get("language", ""),
            group=int(n.get("group", 0)),
        )
        for n in data["nodes"]
    )
    edges = tuple(
        TreeEdge(
            a=e["a"], b=e["b"], weight=float(e["weight"]), similarity=float(e["similarity"])
        )
        for e in data["edges"]
    )
    return ReuseTree(nodes=nodes, edges=edges, params=data.get("params", {}))


def _to_dot(tree: ReuseTree) -> str:
    def quote(s: str) -> str:
        return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'

    lines = ["graph reuse {"]
    for n in tree.nodes:
        lines.append(
            f"  {quote(n.document_id)} [label={quote(n.label)}, "
            f"language={quote(n.language)}, group={n.group}];"
        )
    for e in sorted(tree.edges, key=lambda e: (e.a, e.b)):
        lines.append(
            f"  {quote(e.a)} -- {quote(e.b)} "
            f"[weight={e.weight!r}, similarity={e.similarity!r}];"
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_graph(tree: ReuseTree, format: str = JSON_FORMAT) -> str:
    """Serialize the tree; json round-trips, dot feeds graph-layout tools."""
    if format == JSON_FORMAT:
        return json.dumps(tree_to_dict(tree), ensure_ascii=False, indent=2, sort_keys=True) + "\n"
    if format == DOT_FORMAT:
        return _to_dot(tree)
    raise ValueError(f"unknown export format {format!r}; expected one of {FORMATS}")


def import_graph(serialized: str) -> ReuseTree:
    """Inverse of the json export."""
    return tree_from_dict(json.loads(serialized))
