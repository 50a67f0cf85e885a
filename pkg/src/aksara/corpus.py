"""Corpus ingestion, immutable token streams, and the shingle cache.

A corpus is described by a JSON manifest listing document records; every
witness is its own record, even witnesses of the "same" text. Ingest
tokenizes each document once; normalized streams and shingle sets are
memoized per parameter bundle and can be persisted to a diff-able
on-disk cache (sorted keys, one file per document per bundle).

Philological corpora are messy: a missing or unreadable document file is
a per-record warning and the record is skipped, never a fatal error. An
unreadable manifest is fatal.
"""

from __future__ import annotations

import hashlib
import json
import logging
from dataclasses import dataclass
from pathlib import Path

from aksara.normalizer import NormalizationProfile, normalize
from aksara.scanner import TokenStream, tokenize_aksaras
from aksara.shingler import ShingleParams, ShingleSet, shingles

log = logging.getLogger(__name__)


class CorpusError(Exception):
    """Fatal corpus problem: unreadable or malformed manifest, unknown id."""


@dataclass(frozen=True)
class DocumentRecord:
    """Manifest entry for one document (one witness = one record)."""

    id: str
    path: str
    title: str = ""
    language: str = ""
    century: int | None = None
    notes: str = ""


class CorpusIndex:
    """Immutable-after-load view of an ingested corpus.

    Token streams are built once at ingest; normalized streams and
    shingle sets fill lazily keyed by (id, params, profile) and are
    always re-derivable from the stored text.
    """

    def __init__(
        self,
        records: dict[str, DocumentRecord],
        streams: dict[str, TokenStream],
        warnings: list[str],
        default_profile: NormalizationProfile | None = None,
    ) -> None:
        self.records = records
        self.warnings = warnings
        self.default_profile = (
            default_profile if default_profile is not None else NormalizationProfile.default()
        )
        self._streams = streams
        self._normalized: dict[tuple[str, NormalizationProfile], TokenStream] = {}
        self._shingles: dict[
            tuple[str, ShingleParams, NormalizationProfile], ShingleSet
        ] = {}

    def document_ids(self) -> tuple[str, ...]:
        return tuple(self.records)

    def record(self, document_id: str) -> DocumentRecord:
        self._check(document_id)
        return self.records[document_id]

    def text(self, document_id: str) -> str:
        return self.stream(document_id).text

    def stream(self, document_id: str) -> TokenStream:
        self._check(document_id)
        return self._streams[document_id]

    def normalized(
        self, document_id: str, profile: NormalizationProfile
    ) -> TokenStream:
        self._check(document_id)
        key = (document_id, profile)
        if key not in self._normalized:
            self._normalized[key] = normalize(self._streams[document_id], profile)
        return self._normalized[key]

    def shingles(
        self,
        document_id: str,
        params: ShingleParams,
        profile: NormalizationProfile,
    ) -> ShingleSet:
        self._check(document_id)
        key = (document_id, params, profile)
        if key not in self._shingles:
            self._shingles[key] = shingles(self.normalized(document_id, profile), params)
        return self._shingles[key]

    def _check(self, document_id: str) -> None:
        if document_id not in self.records:
            raise CorpusError(f"unknown document id: {document_id!r}")

    # -- on-disk cache ----------------------------------------------------

    def precompute(
        self,
        cache_dir: str | Path,
        params_list: list[ShingleParams],
        profile: NormalizationProfile,
    ) -> list[Path]:
        """Compute and persist shingle sets for every document and bundle."""
        written = []
        for params in params_list:
            for doc_id in self.document_ids():
                written.append(
                    save_shingles(cache_dir, self.shingles(doc_id, params, profile), profile)
                )
        return written


def bundle_hash(params: ShingleParams, profile: NormalizationProfile) -> str:
    """Stable directory name for one (params, profile) bundle."""
    token = params.cache_token() + "|" + profile.cache_token()
    return hashlib.sha256(token.encode("utf-8")).hexdigest()[:12]


def cache_path(
    cache_dir: str | Path,
    document_id: str,
    params: ShingleParams,
    profile: NormalizationProfile,
) -> Path:
    return Path(cache_dir) / bundle_hash(params, profile) / f"{document_id}.shingles"


def save_shingles(
    cache_dir: str | Path, shingle_set: ShingleSet, profile: NormalizationProfile
) -> Path:
    """Write one document's shingle set as diff-able JSON with sorted keys."""
    path = cache_path(cache_dir, shingle_set.document_id, shingle_set.params, profile)
    path.parent.mkdir(parents=True, exist_ok=True)
    payload = {
        "documentId": shingle_set.document_id,
        "params": {
            "n": shingle_set.params.n,
            "mode": shingle_set.params.mode,
            "k": shingle_set.params.k,
            "unit": shingle_set.params.unit,
        },
        "profile": list(profile.ordered_rules()),
        "keys": sorted(shingle_set.keys),
        "occurrences": {
            key: [list(pos) for pos in shingle_set.occurrences[key]]
            for key in sorted(shingle_set.occurrences)
        },
    }
    path.write_text(
        json.dumps(payload, ensure_ascii=False, indent=1, sort_keys=True) + "\n",
        encoding="utf-8",
    )
    return path


def load_shingles(
    cache_dir: str | Path,
    document_id: str,
    params: ShingleParams,
    profile: NormalizationProfile,
) -> ShingleSet | None:
    """Read one cached shingle set; None when absent."""
    path = cache_path(cache_dir, document_id, params, profile)
    if not path.exists():
        return None
    data = json.loads(path.read_text(encoding="utf-8"))
    occurrences = {
        key: tuple(tuple(int(i) for i in pos) for pos in positions)
        for key, positions in data["occurrences"].items()
    }
    return ShingleSet(
        document_id=data["documentId"],
        params=ShingleParams(**data["params"]),
        keys=frozenset(data["keys"]),
        occurrences=occurrences,
    )


def _parse_manifest(manifest_path: Path) -> dict:
    try:
        data = json.loads(manifest_path.read_text(encoding="utf-8"))
    except OSError as exc:
        raise CorpusError(f"cannot read manifest {manifest_path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise CorpusError(f"manifest {manifest_path} is not valid JSON: {exc}") from exc
    if isinstance(data, dict) and isinstance(data.get("documents"), list):
        return data
    raise CorpusError(
        f"manifest {manifest_path} must be an object with a 'documents' list"
    )


def ingest(manifest_path: str | Path) -> CorpusIndex:
    """Load a manifest, tokenize every readable document, collect warnings.

    An optional top-level "normalize" list in the manifest sets the
    corpus default normalization profile (overridable per command).
    """
    manifest_path = Path(manifest_path)
    manifest = _parse_manifest(manifest_path)
    entries = manifest["documents"]
    base = manifest_path.parent

    records: dict[str, DocumentRecord] = {}
    streams: dict[str, TokenStream] = {}
    warnings: list[str] = []

    def warn(message: str) -> None:
        warnings.append(message)
        log.warning("%s", message)

    default_profile: NormalizationProfile | None = None
    if "normalize" in manifest:
        rules = manifest["normalize"]
        try:
            if not isinstance(rules, list):
                raise ValueError(f"'normalize' must be a list, got {type(rules).__name__}")
            default_profile = NormalizationProfile.of(*rules)
        except ValueError as exc:
            warn(f"manifest 'normalize' ignored: {exc}")

    for i, entry in enumerate(entries):
        if not isinstance(entry, dict) or "id" not in entry or "path" not in entry:
            warn(f"manifest entry #{i} malformed (needs id and path); skipped")
            continue
        doc_id = str(entry["id"])
        if doc_id in records:
            warn(f"duplicate document id {doc_id!r}; later entry skipped")
            continue
        path = Path(entry["path"])
        if not path.is_absolute():
            path = base / path
        try:
            raw = path.read_text(encoding="utf-8")
        except (OSError, UnicodeDecodeError) as exc:
            warn(f"document {doc_id!r}: cannot read {path}: {exc}; record excluded")
            continue
        records[doc_id] = DocumentRecord(
            id=doc_id,
            path=str(path),
            title=str(entry.get("title", "")),
            language=str(entry.get("language", "")),
            century=entry.get("century"),
            notes=str(entry.get("notes", "")),
        )
        streams[doc_id] = tokenize_aksaras(raw, document_id=doc_id)

    return CorpusIndex(
        records=records,
        streams=streams,
        warnings=warnings,
        default_profile=default_profile,
    )


def get_shingles(
    index: CorpusIndex,
    document_id: str,
    params: ShingleParams,
    profile: NormalizationProfile,
) -> ShingleSet:
    """Cached shingle set for one document (computed on first request)."""
    return index.shingles(document_id, params, profile)
