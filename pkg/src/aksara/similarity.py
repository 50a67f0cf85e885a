"""Set-similarity metrics and the pairwise corpus matrix.

Jaccard = |A∩B| / |A∪B|, Dice = 2|A∩B| / (|A|+|B|), both over shingle
KEYS. Counts are exact integers; division to float happens only at the
boundary, so matrix values are bit-reproducible. Two empty sets score 0
(two unreadable fragments should not cluster) and such documents are
flagged on the matrix rather than silently scored.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Protocol

import numpy as np

from aksara.normalizer import NormalizationProfile
from aksara.shingler import FUZZY, ShingleParamError, ShingleParams, ShingleSet

JACCARD = "jaccard"
DICE = "dice"
METRICS = (JACCARD, DICE)

COMBINE_NS = (2, 3, 4, 5)


class CorpusLike(Protocol):
    def document_ids(self) -> tuple[str, ...]: ...

    def shingles(
        self, document_id: str, params: ShingleParams, profile: NormalizationProfile
    ) -> ShingleSet: ...


def _check_pair(a: ShingleSet, b: ShingleSet) -> None:
    if a.params != b.params:
        raise ShingleParamError(
            f"cannot compare shingle sets with different params: "
            f"{a.params} vs {b.params}"
        )


def jaccard(a: ShingleSet, b: ShingleSet) -> float:
    """Jaccard index over keys; 0.0 when both sets are empty."""
    _check_pair(a, b)
    union = len(a.keys | b.keys)
    if union == 0:
        return 0.0
    return len(a.keys & b.keys) / union


def dice(a: ShingleSet, b: ShingleSet) -> float:
    """Dice coefficient over keys; 0.0 when both sets are empty."""
    _check_pair(a, b)
    total = len(a.keys) + len(b.keys)
    if total == 0:
        return 0.0
    return 2 * len(a.keys & b.keys) / total


_METRIC_FNS = {JACCARD: jaccard, DICE: dice}


def metric_fn(metric: str):
    if metric not in _METRIC_FNS:
        raise ValueError(f"metric must be one of {METRICS}, got {metric!r}")
    return _METRIC_FNS[metric]


@dataclass
class SimilarityMatrix:
    """Symmetric pairwise metric values over the corpus documents.

    empty_documents flags ids whose shingle set was empty: they score 0
    against everything and 1 with themselves by convention.
    """

    document_ids: tuple[str, ...]
    params: ShingleParams
    profile: NormalizationProfile
    metric: str
    values: np.ndarray
    combine: str | None = None
    empty_documents: tuple[str, ...] = ()

    def value(self, id_a: str, id_b: str) -> float:
        i = self.document_ids.index(id_a)
        j = self.document_ids.index(id_b)
        return float(self.values[i, j])

    def to_tsv(self) -> str:
        """Header row/column of ids; cells with 6 fractional digits."""
        lines = ["\t".join(("id",) + self.document_ids)]
        for i, doc_id in enumerate(self.document_ids):
            cells = [f"{self.values[i, j]:.6f}" for j in range(len(self.document_ids))]
            lines.append("\t".join([doc_id] + cells))
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {
            "documentIds": list(self.document_ids),
            "metric": self.metric,
            "params": {
                "n": self.params.n,
                "mode": self.params.mode,
                "k": self.params.k,
                "unit": self.params.unit,
            },
            "profile": list(self.profile.ordered_rules()),
            "combine": self.combine,
            "emptyDocuments": list(self.empty_documents),
            "values": [[float(v) for v in row] for row in self.values],
        }


def _params_for_n(params: ShingleParams, n: int) -> ShingleParams:
    # Fuzzy masking of n-2 vowels is the identity below n=3.
    mode = params.mode
    if mode == FUZZY and n < 3:
        mode = "contiguous"
    k = params.k if mode == "skip" else 0
    return ShingleParams(n=n, mode=mode, k=k, unit=params.unit)


def pair_value(
    corpus: CorpusLike,
    id_a: str,
    id_b: str,
    params: ShingleParams,
    profile: NormalizationProfile,
    metric: str,
    combine: str | None = None,
) -> float:
    """Metric for one pair; combine="mean" averages over n in {2,3,4,5}."""
    fn = metric_fn(metric)
    if combine is None:
        a = corpus.shingles(id_a, params, profile)
        b = corpus.shingles(id_b, params, profile)
        return fn(a, b)
    if combine != "mean":
        raise ValueError(f"combine must be None or 'mean', got {combine!r}")
    total = 0.0
    for n in COMBINE_NS:
        p = _params_for_n(params, n)
        total += fn(corpus.shingles(id_a, p, profile), corpus.shingles(id_b, p, profile))
    return total / len(COMBINE_NS)


def similarity_matrix(
    corpus: CorpusLike,
    params: ShingleParams,
    profile: NormalizationProfile,
    metric: str = DICE,
    combine: str | None = None,
    document_ids: Iterable[str] | None = None,
) -> SimilarityMatrix:
    """All C(m,2) pairwise values, symmetric, diagonal 1 by convention."""
    metric_fn(metric)
    ids = tuple(document_ids) if document_ids is not None else corpus.document_ids()
    m = len(ids)
    values = np.ones((m, m), dtype=np.float64)
    for i in range(m):
        for j in range(i + 1, m):
            v = pair_value(corpus, ids[i], ids[j], params, profile, metric, combine)
            values[i, j] = v
            values[j, i] = v
    empty = tuple(
        doc_id for doc_id in ids if len(corpus.shingles(doc_id, params, profile)) == 0
    )
    return SimilarityMatrix(
        document_ids=ids,
        params=params,
        profile=profile,
        metric=metric,
        values=values,
        combine=combine,
        empty_documents=empty,
    )
