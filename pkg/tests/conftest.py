from pathlib import Path

import pytest

from aksara import corpus
from aksara.normalizer import NormalizationProfile
from aksara.scanner import TokenStream, tokenize_aksaras
from aksara.shingler import ShingleParams, shingles

SAMPLE_MANIFEST = Path(__file__).resolve().parent.parent / "sample_corpus" / "corpus.json"


@pytest.fixture(scope="session")
def sample_index() -> corpus.CorpusIndex:
    return corpus.ingest(SAMPLE_MANIFEST)


@pytest.fixture(scope="session")
def default_profile() -> NormalizationProfile:
    return NormalizationProfile.default()


class FakeCorpus:
    """Minimal corpus stand-in over in-memory texts, for matrix tests."""

    def __init__(self, texts: dict[str, str]) -> None:
        self._streams = {
            doc_id: tokenize_aksaras(text, document_id=doc_id)
            for doc_id, text in texts.items()
        }

    def document_ids(self) -> tuple[str, ...]:
        return tuple(self._streams)

    def normalized(self, document_id: str, profile: NormalizationProfile) -> TokenStream:
        from aksara.normalizer import normalize

        return normalize(self._streams[document_id], profile)

    def shingles(
        self, document_id: str, params: ShingleParams, profile: NormalizationProfile
    ) -> "object":
        return shingles(self.normalized(document_id, profile), params)
