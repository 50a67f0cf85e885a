"""Text-reuse detection for Sanskrit and Sanskrit-adjacent texts.

Documents are tokenized into akṣaras (orthographic syllables), modelled
as sets of n-akṣara shingles, compared with Jaccard/Dice set similarity,
and clustered with a minimum spanning tree whose edges can be explored
pairwise with highlighted matches.
"""

from aksara.scanner import (
    Aksara,
    Grapheme,
    Span,
    TokenStream,
    canonicalize,
    scan_graphemes,
    slice_span,
    tokenize_aksaras,
    tokenize_characters,
)
from aksara.normalizer import NormalizationProfile, normalize
from aksara.shingler import (
    ShingleParams,
    ShingleSet,
    character_shingles,
    contiguous_shingles,
    fuzzy_shingles,
    shingles,
    skip_shingles,
)
from aksara.similarity import SimilarityMatrix, dice, jaccard, similarity_matrix
from aksara.graph import ReuseTree, export_graph, import_graph, minimum_spanning_tree
from aksara.aligner import ComparisonReport, MatchSpan, compare, shared_shingles
from aksara.corpus import CorpusIndex, DocumentRecord, get_shingles, ingest

__version__ = "0.1.0"

__all__ = [
    "Aksara",
    "ComparisonReport",
    "CorpusIndex",
    "DocumentRecord",
    "Grapheme",
    "MatchSpan",
    "NormalizationProfile",
    "ReuseTree",
    "ShingleParams",
    "ShingleSet",
    "SimilarityMatrix",
    "Span",
    "TokenStream",
    "canonicalize",
    "character_shingles",
    "compare",
    "contiguous_shingles",
    "dice",
    "export_graph",
    "fuzzy_shingles",
    "get_shingles",
    "import_graph",
    "ingest",
    "jaccard",
    "minimum_spanning_tree",
    "normalize",
    "scan_graphemes",
    "shared_shingles",
    "shingles",
    "similarity_matrix",
    "skip_shingles",
    "slice_span",
    "tokenize_aksaras",
    "tokenize_characters",
]
